#include "resolvent/relclasses.hpp"

#include <algorithm>

namespace resolvent {

namespace {

Obj rep_s1() { return repa2_obj(1, 0, Matrix(0, 1)); }
Obj rep_i2() { return repa2_obj(1, 1, Matrix::identity(1)); }

void check_backend(const InjClass& c, const Backend& b) {
  require(c.backend == b, ErrKind::BackendMismatch, "object backend does not match the class");
}

/* Induced map Hom(cod f, I) -> Hom(dom f, I) in the hom bases. */
Matrix precompose_matrix(const Mor& f, const Obj& I) {
  auto bc = hom_basis(f.cod, I);
  auto bd = hom_basis(f.dom, I);
  Matrix m(static_cast<int>(bd.size()), static_cast<int>(bc.size()));
  for (size_t j = 0; j < bc.size(); ++j) {
    Matrix col = mor_coords(bd, compose(bc[j], f));
    for (int i = 0; i < m.rows(); ++i) m.at(i, static_cast<int>(j)) = col.at(i, 0);
  }
  return m;
}

/* Contravariant hom complexes of src and dst of f over I with the induced
   chain map between them. */
ChainMap induced_hom_contra(const ChainMap& f, const Obj& I) {
  auto hy = hom_cochain_contravariant(f.dst, I);
  auto hx = hom_cochain_contravariant(f.src, I);
  int lo = std::min(hy.cx.empty() ? 0 : hy.cx.lo, hx.cx.empty() ? 0 : hx.cx.lo);
  int hi = std::max(hy.cx.empty() ? -1 : hy.cx.hi(), hx.cx.empty() ? -1 : hx.cx.hi());
  std::vector<Mor> comps;
  for (int n = lo; n <= hi; ++n) {
    int m = -n;
    std::vector<Mor> by = (!hy.cx.empty() && n >= hy.cx.lo && n <= hy.cx.hi())
                              ? hy.bases[n - hy.cx.lo]
                              : std::vector<Mor>{};
    std::vector<Mor> bx = (!hx.cx.empty() && n >= hx.cx.lo && n <= hx.cx.hi())
                              ? hx.bases[n - hx.cx.lo]
                              : std::vector<Mor>{};
    Matrix mat(static_cast<int>(bx.size()), static_cast<int>(by.size()));
    for (size_t j = 0; j < by.size(); ++j) {
      Matrix col = mor_coords(bx, compose(by[j], f.at(m)));
      for (int i = 0; i < mat.rows(); ++i) mat.at(i, static_cast<int>(j)) = col.at(i, 0);
    }
    comps.push_back(Mor{hy.cx.obj_at(n), hx.cx.obj_at(n), {mat}});
  }
  return make_chain_map(hy.cx, hx.cx, lo, std::move(comps));
}

}  // namespace

InjClass full_injectives(const Backend& b) {
  InjClass c{InjClassKind::FullInjectives, b, {}};
  switch (b.kind) {
    case BackendKind::VectFp: c.generators = {vect_obj(1)}; break;
    case BackendKind::NilpMod: c.generators = {nilp_regular(b.nilp)}; break;
    case BackendKind::RepA2: c.generators = {rep_s1(), rep_i2()}; break;
  }
  return c;
}

InjClass prod_of(const Backend& b, std::vector<Obj> es) {
  require(!es.empty(), ErrKind::PreconditionViolation, "empty generator list");
  for (const auto& e : es)
    require(e.backend == b, ErrKind::BackendMismatch, "generator backend mismatch");
  return InjClass{InjClassKind::ProdOf, b, std::move(es)};
}

InjClass torsion_injectives() {
  Backend b{BackendKind::RepA2};
  return InjClass{InjClassKind::TorsionInjectives, b, {rep_s1()}};
}

bool in_class(const InjClass& c, const Obj& a) {
  check_backend(c, a.backend);
  switch (c.kind) {
    case InjClassKind::FullInjectives:
      return is_injective_obj(a);
    case InjClassKind::TorsionInjectives:
      return a.dims[1] == 0;
    case InjClassKind::ProdOf: {
      if (a.is_zero()) return true;
      Mor u = preenvelope(c, a);
      return find_left_factor(u, id_mor(a)).has_value();  // split mono
    }
  }
  return false;
}

Mor preenvelope(const InjClass& c, const Obj& a) {
  check_backend(c, a.backend);
  switch (c.kind) {
    case InjClassKind::FullInjectives:
      return injective_envelope(a);
    case InjClassKind::TorsionInjectives: {
      Obj t = repa2_obj(a.dims[0], 0, Matrix(0, a.dims[0]));
      return Mor{a, t, {Matrix::identity(a.dims[0]), Matrix(0, a.dims[1])}};
    }
    case InjClassKind::ProdOf: {
      std::vector<Obj> summands;
      std::vector<Mor> maps;
      for (const auto& e : c.generators)
        for (const auto& b : hom_basis(a, e)) {
          summands.push_back(e);
          maps.push_back(b);
        }
      if (summands.empty()) return zero_mor(a, zero_obj(a.backend));
      auto bp = biproduct(summands);
      Mor u = zero_mor(a, bp.obj);
      for (size_t i = 0; i < maps.size(); ++i) u = mor_add(u, compose(bp.inj[i], maps[i]));
      return u;
    }
  }
  fail(ErrKind::PreconditionViolation, "unreachable");
}

bool is_I_mono(const InjClass& c, const Mor& f) {
  check_backend(c, f.dom.backend);
  for (const auto& I : c.generators) {
    Matrix m = precompose_matrix(f, I);
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

RelResolution rel_inj_res(const InjClass& c, const Obj& a, int depth) {
  require(depth >= 1, ErrKind::DepthInsufficient, "depth must be >= 1");
  RelResolution out;
  out.cls = c;
  out.target = a;
  out.depth = depth;
  out.aug = preenvelope(c, a);
  std::vector<Obj> objs = {out.aug.cod};
  std::vector<Mor> diffs;
  Mor last = out.aug;
  for (int i = 1; i < depth; ++i) {
    auto q = cokernel(last);
    Mor e = preenvelope(c, q.obj);
    if (e.cod.is_zero()) {
      out.terminated = true;
      break;
    }
    diffs.push_back(compose(e, q.map));
    objs.push_back(e.cod);
    last = e;
  }
  if (!out.terminated && preenvelope(c, cokernel(last).obj).cod.is_zero()) out.terminated = true;
  out.res = make_complex(a.backend, 0, std::move(objs), std::move(diffs));
  return out;
}

RelResolution pad_rel_resolution(const RelResolution& r, std::mt19937_64& rng) {
  RelResolution out = r;
  int deg = static_cast<int>(rng() % static_cast<uint64_t>(r.res.hi() + 1));
  const Obj& g = r.cls.generators[rng() % r.cls.generators.size()];
  Complex padded = direct_sum({r.res, disk(deg, g)});
  auto bp0 = biproduct({r.res.obj_at(0), deg == 0 ? g : zero_obj(r.target.backend)});
  out.aug = compose(bp0.inj[0], r.aug);
  // rebuild against the actual degree-zero term of the sum
  require(bp0.obj == padded.obj_at(0), ErrKind::ShapeMismatch, "pad bookkeeping");
  out.res = padded;
  return out;
}

ChainMap extend_chain_map(const Mor& g, const RelResolution& ra, const RelResolution& rb) {
  require(g.dom == ra.target && g.cod == rb.target, ErrKind::DomainMismatch,
          "map endpoints do not match the resolutions");
  Complex sa = stalk(0, ra.target);
  ChainMap through = make_chain_map(sa, ra.res, 0, {ra.aug});
  ChainMap rhs = make_chain_map(sa, rb.res, 0, {compose(rb.aug, g)});
  auto t = solve_chain_map_through(ra.res, rb.res, through, rhs);
  require(t.has_value(), ErrKind::NoLift, "no lift between the relative resolutions");
  return *t;
}

RelComparison homotopy_equiv_resolutions(const RelResolution& r1, const RelResolution& r2) {
  require(r1.target == r2.target, ErrKind::DomainMismatch, "resolutions of different objects");
  RelComparison out;
  Mor idt = id_mor(r1.target);
  out.fwd = extend_chain_map(idt, r1, r2);
  out.bwd = extend_chain_map(idt, r2, r1);
  out.window_hi = std::min(r1.res.hi(), r2.res.hi()) - 1;
  auto h1 = find_homotopy_in(compose(out.bwd, out.fwd), id_chain_map(r1.res), 0, out.window_hi);
  auto h2 = find_homotopy_in(compose(out.fwd, out.bwd), id_chain_map(r2.res), 0, out.window_hi);
  require(h1.has_value() && h2.has_value(), ErrKind::NoLift,
          "no homotopy between the round trips in the certified window");
  out.h_fwd = *h1;
  out.h_bwd = *h2;
  return out;
}

bool is_I_we(const InjClass& c, const ChainMap& f) {
  check_backend(c, f.src.backend);
  for (const auto& I : c.generators)
    if (!is_quasi_iso(induced_hom_contra(f, I))) return false;
  return true;
}

bool is_I_acyclic(const InjClass& c, const Complex& x) {
  check_backend(c, x.backend);
  for (const auto& I : c.generators)
    if (!is_exact(hom_cochain_contravariant(x, I).cx)) return false;
  return true;
}

FibrationStatus is_I_fibration(const InjClass& c, const ChainMap& f) {
  int lo = std::min(f.src.lo, f.dst.lo), hi = std::max(f.src.hi(), f.dst.hi());
  for (int m = lo; m <= hi; ++m) {
    if (!is_split_epi(f.at(m))) return FibrationStatus::Unknown;
    if (!in_class(c, kernel(f.at(m)).obj)) return FibrationStatus::Unknown;
  }
  return FibrationStatus::Certified;
}

Ab4Report ab4_I_k_check(const InjClass& c, const std::vector<Complex>& family, int k, int depth) {
  require(!family.empty(), ErrKind::PreconditionViolation, "empty family");
  Ab4Report out;
  Complex p = direct_sum(family);
  out.n_lo = k + 1;
  out.n_hi = depth - 2;
  for (int n = out.n_lo; n <= out.n_hi; ++n) {
    bool hom_ok = true;
    for (const auto& I : c.generators)
      if (!cohomology_obj(hom_cochain_contravariant(p, I).cx, -n).is_zero()) hom_ok = false;
    auto q = cokernel(p.d(n - 1));
    Mor dbar = factor_through_epi(q.map, p.d(n));
    bool mono_ok = is_I_mono(c, dbar);
    out.via_hom.push_back(hom_ok);
    out.via_mono.push_back(mono_ok);
    if (hom_ok != mono_ok) out.agree = false;
  }
  return out;
}

std::optional<int> I_codim_upper(const InjClass& c, const Obj& a, int max_depth) {
  auto r = rel_inj_res(c, a, max_depth + 1);
  if (!r.terminated) return std::nullopt;
  Complex t = trim(r.res);
  return t.empty() ? 0 : t.hi();
}

Obj torsion_Q(const Obj& a) {
  require(a.backend.kind == BackendKind::RepA2, ErrKind::BackendMismatch, "quiver objects only");
  return vect_obj(a.dims[0]);
}

Mor torsion_Q(const Mor& f) { return Mor{torsion_Q(f.dom), torsion_Q(f.cod), {f.comp[0]}}; }

Complex torsion_Q(const Complex& x) {
  Backend vb{BackendKind::VectFp};
  if (x.empty()) return zero_complex(vb);
  std::vector<Obj> objs;
  std::vector<Mor> diffs;
  for (int n = x.lo; n <= x.hi(); ++n) {
    objs.push_back(torsion_Q(x.obj_at(n)));
    if (n < x.hi()) diffs.push_back(torsion_Q(x.d(n)));
  }
  return make_complex(vb, x.lo, std::move(objs), std::move(diffs));
}

ChainMap torsion_Q(const ChainMap& f) {
  Complex src = torsion_Q(f.src), dst = torsion_Q(f.dst);
  int lo = std::min(f.src.lo, f.dst.lo), hi = std::max(f.src.hi(), f.dst.hi());
  if (hi < lo) return zero_chain_map(src, dst);
  std::vector<Mor> comps;
  for (int n = lo; n <= hi; ++n) comps.push_back(torsion_Q(f.at(n)));
  return make_chain_map(src, dst, lo, std::move(comps));
}

Obj torsion_S(const Obj& v) {
  require(v.backend.kind == BackendKind::VectFp, ErrKind::BackendMismatch, "vector spaces only");
  return repa2_obj(v.dims[0], 0, Matrix(0, v.dims[0]));
}

Mor torsion_S(const Mor& f) {
  return Mor{torsion_S(f.dom), torsion_S(f.cod), {f.comp[0], Matrix(0, 0)}};
}

}  // namespace resolvent
