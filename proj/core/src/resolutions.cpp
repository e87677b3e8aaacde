#include "resolvent/resolutions.hpp"

#include <algorithm>

namespace resolvent {

ObjectResolution inj_res_object(const Obj& a, int depth) {
  require(depth >= 1, ErrKind::DepthInsufficient, "depth must be >= 1");
  ObjectResolution out;
  out.target = a;
  out.depth = depth;
  Mor u = injective_envelope(a);
  out.aug = u;
  std::vector<Obj> objs = {u.cod};
  std::vector<Mor> diffs;
  Mor last_mono = u;  // current-term embedding of the running syzygy
  for (int i = 1; i < depth; ++i) {
    auto q = cokernel(last_mono);
    if (q.obj.is_zero()) {
      out.terminated = true;
      break;
    }
    Mor v = injective_envelope(q.obj);
    diffs.push_back(compose(v, q.map));
    objs.push_back(v.cod);
    last_mono = v;
  }
  if (!out.terminated && cokernel(last_mono).obj.is_zero()) out.terminated = true;
  out.res = make_complex(a.backend, 0, std::move(objs), std::move(diffs));
  return out;
}

PartialResolution inj_res_bounded_below(const Complex& x, int depth) {
  require(depth >= 1, ErrKind::DepthInsufficient, "depth must be >= 1");
  PartialResolution out;
  out.target = x;
  if (x.empty()) {
    out.res = zero_complex(x.backend);
    out.lambda = zero_chain_map(x, out.res);
    out.window_hi = 0;
    out.terminated = true;
    return out;
  }
  int lo = x.lo, T = x.hi() + depth;
  std::vector<Obj> eobjs;
  std::vector<Mor> ediffs;   // e^n: E^n -> E^(n+1)
  std::vector<Mor> lcomps;   // lambda^n
  Mor u0 = injective_envelope(x.obj_at(lo));
  eobjs.push_back(u0.cod);
  lcomps.push_back(u0);
  for (int n = lo; n < T; ++n) {
    const Mor& lam = lcomps.back();
    // quotients by coboundaries on both sides
    auto qx = cokernel(x.d(n - 1));
    Mor prev_e = (n == lo) ? zero_mor(zero_obj(x.backend), eobjs.back())
                           : ediffs.back();
    auto qe = cokernel(prev_e);
    Mor lam_bar = factor_through_epi(qx.map, compose(qe.map, lam));
    Mor d_bar = factor_through_epi(qx.map, x.d(n));
    auto po = pushout(d_bar, lam_bar);
    Mor iota = injective_envelope(po.obj);
    Mor lam_next = compose(iota, po.from_b);
    Mor e_n = compose(iota, compose(po.from_c, qe.map));
    if (iota.cod.is_zero() && n >= x.hi()) {
      out.terminated = true;
      break;
    }
    ediffs.push_back(e_n);
    eobjs.push_back(iota.cod);
    lcomps.push_back(lam_next);
  }
  out.res = make_complex(x.backend, lo, std::move(eobjs), std::move(ediffs));
  out.lambda = make_chain_map(x, out.res, lo, std::move(lcomps));
  out.window_hi = out.terminated ? std::max(x.hi(), out.res.hi()) + 1 : x.hi() + depth - 2;
  return out;
}

ShortExact make_ses(const Mor& i, const Mor& p) {
  require(i.cod == p.dom, ErrKind::DomainMismatch, "short exact sequence endpoints");
  require(is_mono(i), ErrKind::NotMono, "first map is not mono");
  require(is_epi(p), ErrKind::NotEpi, "second map is not epi");
  require(mor_is_zero(compose(p, i)), ErrKind::NotExact, "composite is nonzero");
  auto k = kernel(p);
  require(k.obj.dims == i.dom.dims, ErrKind::NotExact, "kernel does not match the sub");
  return ShortExact{i, p};
}

HorseshoeResult horseshoe(const ShortExact& ses, const ObjectResolution& ra,
                          const ObjectResolution& rc) {
  require(ra.target == ses.i.dom && rc.target == ses.p.cod, ErrKind::DomainMismatch,
          "resolutions do not match the sequence ends");
  int L = std::max(ra.res.hi(), rc.res.hi()) + 1;
  HorseshoeResult out;
  out.middle.target = ses.i.cod;
  out.middle.depth = std::max(ra.depth, rc.depth);
  std::vector<Obj> objs;
  std::vector<Mor> diffs;
  Mor i_cur = ses.i, p_cur = ses.p;
  Mor a_mono = ra.aug, c_mono = rc.aug;
  Mor prev_qb_map = zero_mor(zero_obj(ses.i.dom.backend), zero_obj(ses.i.dom.backend));
  Mor prev_b = prev_qb_map;
  for (int i = 0; i < L; ++i) {
    Obj ea = ra.res.obj_at(i), ec = rc.res.obj_at(i);
    auto ext = find_left_factor(i_cur, a_mono);
    require(ext.has_value(), ErrKind::NotInjectiveTerm, "cannot extend along the mono");
    auto bp = biproduct({ea, ec});
    Mor b = mor_add(compose(bp.inj[0], *ext), compose(bp.inj[1], compose(c_mono, p_cur)));
    out.iota.push_back(bp.inj[0]);
    out.pi.push_back(bp.proj[1]);
    objs.push_back(bp.obj);
    if (i == 0)
      out.middle.aug = b;
    else
      diffs.push_back(compose(b, prev_qb_map));
    if (i + 1 == L) break;
    auto qa = cokernel(a_mono);
    auto qb = cokernel(b);
    auto qc = cokernel(c_mono);
    Mor i_next = factor_through_epi(qa.map, compose(qb.map, bp.inj[0]));
    Mor p_next = factor_through_epi(qb.map, compose(qc.map, bp.proj[1]));
    Mor a_next = factor_through_epi(qa.map, ra.res.d(i));
    Mor c_next = factor_through_epi(qc.map, rc.res.d(i));
    require(qa.obj.is_zero() || is_mono(a_next), ErrKind::NotExact,
            "first resolution is not exact at this depth");
    require(qc.obj.is_zero() || is_mono(c_next), ErrKind::NotExact,
            "second resolution is not exact at this depth");
    i_cur = i_next;
    p_cur = p_next;
    a_mono = a_next;
    c_mono = c_next;
    prev_qb_map = qb.map;
  }
  out.middle.res = make_complex(ses.i.dom.backend, 0, std::move(objs), std::move(diffs));
  out.middle.terminated = ra.terminated && rc.terminated;
  return out;
}

CEResolution ce_resolution(const Complex& a, int depth) {
  require(depth >= 1, ErrKind::DepthInsufficient, "depth must be >= 1");
  CEResolution ce;
  ce.target = a;
  ce.depth = depth;
  if (a.empty()) {
    ce.grid = make_bicomplex(a.backend, true, 0, 0, {}, {}, {});
    return ce;
  }
  int lo = a.lo, hi = a.hi();
  // degreewise sub/quotient data
  std::vector<ImageParts> bims;  // B^n as image of d^(n-1), n = lo..hi+1
  for (int n = lo; n <= hi + 1; ++n) bims.push_back(image(a.d(n - 1)));
  for (int n = lo; n <= hi + 1; ++n) ce.resB.push_back(inj_res_object(bims[n - lo].obj, depth));
  for (int n = lo; n <= hi; ++n) {
    auto z = cocycles(a, n);
    Mor j = factor_through_mono(z.incl, bims[n - lo].mono);
    auto h = cokernel(j);
    ce.resH.push_back(inj_res_object(h.obj, depth));
    // 0 -> B^n -> Z^n -> H^n -> 0
    ce.hsZ.push_back(horseshoe(make_ses(j, h.map), ce.resB[n - lo], ce.resH[n - lo]));
    // 0 -> Z^n -> A^n -> B^(n+1) -> 0
    Mor to_next_b = bims[n + 1 - lo].epi;
    ce.hsA.push_back(
        horseshoe(make_ses(z.incl, to_next_b), ce.hsZ[n - lo].middle, ce.resB[n + 1 - lo]));
    ce.lambda.push_back(ce.hsA[n - lo].middle.aug);
  }
  std::vector<std::vector<Obj>> rows(depth);
  std::vector<std::vector<Mor>> d0_rows(depth), d1_rows(depth);
  for (int m = 0; m < depth; ++m)
    for (int n = lo; n <= hi; ++n) {
      const Complex& coln = ce.hsA[n - lo].middle.res;
      rows[m].push_back(coln.obj_at(m));
      // vertical with the columnwise sign
      Mor v = coln.d(m);
      if (((n % 2) + 2) % 2 == 1) v = mor_neg(v);
      d1_rows[m].push_back(v);
      // horizontal: project to E_B^(n+1), include into E_Z^(n+1), then into E_A^(n+1)
      Mor h = zero_mor(coln.obj_at(m), n + 1 <= hi ? ce.hsA[n + 1 - lo].middle.res.obj_at(m)
                                                   : zero_obj(a.backend));
      if (n + 1 <= hi) {
        const auto& cur = ce.hsA[n - lo];
        const auto& hz = ce.hsZ[n + 1 - lo];
        const auto& ha = ce.hsA[n + 1 - lo];
        if (m < static_cast<int>(cur.pi.size()) && m < static_cast<int>(hz.iota.size()) &&
            m < static_cast<int>(ha.iota.size()))
          h = compose(ha.iota[m], compose(hz.iota[m], cur.pi[m]));
      }
      d0_rows[m].push_back(h);
    }
  ce.grid = make_bicomplex(a.backend, true, 0, lo, std::move(rows), std::move(d0_rows),
                           std::move(d1_rows));
  return ce;
}

namespace {

/* Check that the augmented vertical complex (aug_obj in degree -1, then the
   given terms) is exact in degrees -1..max_exact and has injective terms. */
bool is_windowed_resolution(const Obj& aug_obj, const Mor& aug, const std::vector<Obj>& terms,
                            const std::vector<Mor>& verts, int max_exact) {
  std::vector<Obj> objs = {aug_obj};
  for (const auto& t : terms) {
    if (!is_injective_obj(t)) return false;
    objs.push_back(t);
  }
  std::vector<Mor> diffs = {aug};
  for (const auto& v : verts) diffs.push_back(v);
  Complex cx;
  try {
    cx = make_complex(aug_obj.backend, -1, std::move(objs), std::move(diffs));
  } catch (const Error&) {
    return false;
  }
  return is_exact_in(cx, -1, max_exact);
}

}  // namespace

CEValidation validate_ce(const CEResolution& ce) {
  CEValidation v;
  const Complex& a = ce.target;
  if (a.empty()) {
    v = {true, true, true, true, true};
    return v;
  }
  int lo = a.lo, hi = a.hi();
  v.columns_windowed = ce.grid.c0 == lo && ce.grid.c1 == hi;
  // work with the commuting double complex: strip the columnwise signs
  Bicomplex c0 = sign_trick(ce.grid);
  int depth = ce.depth;
  int max_exact = depth - 2;
  bool okB = true, okZ = true, okH = true, okF = true;
  for (int n = lo; n <= hi; ++n) {
    // per-row subobjects of column n
    std::vector<ImageParts> bcols;
    std::vector<SubQuotient> zcols;
    for (int m = 0; m < depth; ++m) {
      bcols.push_back(image(c0.d0_at(m, n - 1)));
      zcols.push_back(kernel(c0.d0_at(m, n)));
    }
    // induced verticals
    std::vector<Mor> bverts, zverts;
    for (int m = 0; m + 1 < depth; ++m) {
      bverts.push_back(
          factor_through_mono(bcols[m + 1].mono, compose(c0.d1_at(m, n), bcols[m].mono)));
      zverts.push_back(
          factor_through_mono(zcols[m + 1].map, compose(c0.d1_at(m, n), zcols[m].map)));
    }
    // (ce.5): the full column resolves A^n
    {
      std::vector<Obj> terms;
      std::vector<Mor> verts;
      for (int m = 0; m < depth; ++m) terms.push_back(c0.obj_at(m, n));
      for (int m = 0; m + 1 < depth; ++m) verts.push_back(c0.d1_at(m, n));
      if (!is_mono(ce.lambda[n - lo]) ||
          !is_windowed_resolution(a.obj_at(n), ce.lambda[n - lo], terms, verts, max_exact))
        okF = false;
    }
    // (ce.2): horizontal coboundaries resolve B^n(A)
    {
      auto bA = image(a.d(n - 1));
      Mor u;
      if (n == lo) {
        u = zero_mor(bA.obj, bcols[0].obj);  // B^lo(A) = 0
      } else {
        // B^n(A) -> im(d0^(0,n-1)) induced by lambda^(n-1)
        Mor w = factor_through_mono(bcols[0].mono,
                                    compose(c0.d0_at(0, n - 1), ce.lambda[n - 1 - lo]));
        u = factor_through_epi(bA.epi, w);
      }
      std::vector<Obj> terms;
      for (const auto& b : bcols) terms.push_back(b.obj);
      if (!is_mono(u) || !is_windowed_resolution(bA.obj, u, terms, bverts, max_exact)) okB = false;
    }
    // (ce.3): horizontal cocycles resolve Z^n(A)
    auto zA = cocycles(a, n);
    Mor wz = factor_through_mono(zcols[0].map, compose(ce.lambda[n - lo], zA.incl));
    {
      std::vector<Obj> terms;
      for (const auto& z : zcols) terms.push_back(z.obj);
      if (!is_mono(wz) || !is_windowed_resolution(zA.obj, wz, terms, zverts, max_exact))
        okZ = false;
    }
    // (ce.4): horizontal cohomology resolves H^n(A)
    {
      auto hA = cohomology(a, n);
      std::vector<Obj> terms;
      std::vector<SubQuotient> hcols;
      for (int m = 0; m < depth; ++m) {
        Mor j = factor_through_mono(zcols[m].map, bcols[m].mono);
        hcols.push_back(cokernel(j));
        terms.push_back(hcols.back().obj);
      }
      std::vector<Mor> hverts;
      for (int m = 0; m + 1 < depth; ++m)
        hverts.push_back(
            factor_through_epi(hcols[m].map, compose(hcols[m + 1].map, zverts[m])));
      // induced augmentation H^n(A) -> H-col^0
      Mor uh = factor_through_epi(hA.proj, compose(hcols[0].map, wz));
      if (!is_mono(uh) || !is_windowed_resolution(hA.h, uh, terms, hverts, max_exact)) okH = false;
    }
  }
  v.b_columns_resolve = okB;
  v.z_columns_resolve = okZ;
  v.h_columns_resolve = okH;
  v.full_columns_resolve = okF;
  return v;
}

CETotResult ce_tot(const CEResolution& ce) {
  CETotResult out;
  out.tot = tot_bicomplex(ce.grid);
  if (ce.target.empty()) {
    out.lambda = zero_chain_map(ce.target, out.tot.cx);
    out.window_hi = 0;
    return out;
  }
  std::vector<Mor> comps;
  for (int n = ce.target.lo; n <= ce.target.hi(); ++n)
    comps.push_back(compose(out.tot.inj(0, n), ce.lambda[n - ce.target.lo]));
  out.lambda = make_chain_map(ce.target, out.tot.cx, ce.target.lo, std::move(comps));
  bool terminated = true;
  for (const auto& hs : ce.hsA)
    if (!hs.middle.terminated) terminated = false;
  out.window_hi =
      terminated ? std::max(ce.target.hi(), out.tot.cx.hi()) + 1 : ce.target.lo + ce.depth - 2;
  return out;
}

KillResult kill_coboundaries(const Complex& x, int n) {
  KillResult out;
  auto q = cokernel(x.d(n - 1));
  Mor iota;
  if (is_injective_obj(q.obj)) {
    out.envelope_was_identity = true;
    iota = id_mor(q.obj);
  } else {
    iota = injective_envelope(q.obj);
  }
  Obj e = iota.cod;
  out.added = e;
  if (x.empty() && e.is_zero()) {
    out.k = x;
    out.pi = id_chain_map(x);
    return out;
  }
  int L = x.empty() ? n : std::min(x.lo, n);
  int R = x.empty() ? n + 1 : std::max(x.hi(), n + 1);
  auto bp = biproduct({x.obj_at(n + 1), e});
  std::vector<Obj> objs;
  std::vector<Mor> diffs;
  std::vector<Mor> picomps;
  for (int m = L; m <= R; ++m) {
    objs.push_back(m == n + 1 ? bp.obj : x.obj_at(m));
    picomps.push_back(m == n + 1 ? bp.proj[0] : id_mor(x.obj_at(m)));
  }
  for (int m = L; m < R; ++m) {
    if (m == n) {
      Mor d = mor_add(compose(bp.inj[0], x.d(n)), compose(bp.inj[1], compose(iota, q.map)));
      diffs.push_back(d);
    } else if (m == n + 1) {
      diffs.push_back(compose(x.d(n + 1), bp.proj[0]));
    } else {
      diffs.push_back(x.d(m));
    }
  }
  out.k = make_complex(x.backend, L, std::move(objs), std::move(diffs));
  out.pi = make_chain_map(out.k, x, L, std::move(picomps));
  return out;
}

int ding_yang_index(int i) {
  require(i >= 0, ErrKind::PreconditionViolation, "index must be nonnegative");
  int b = 0;
  while ((b + 1) * (b + 1) <= i) ++b;
  return i - b * b - b;
}

DingYangResult ding_yang_iterate(const Complex& x, int steps) {
  DingYangResult out;
  out.ys.push_back(x);
  for (int i = 0; i < steps; ++i) {
    int n = ding_yang_index(i);
    out.ns.push_back(n);
    out.ys.push_back(kill_coboundaries(out.ys.back(), n).k);
  }
  return out;
}

HomCochain hom_cochain_covariant(const Obj& a, const Complex& y) {
  HomCochain out;
  Backend vb{BackendKind::VectFp};
  if (y.empty()) {
    out.cx = zero_complex(vb);
    return out;
  }
  std::vector<Obj> objs;
  for (int n = y.lo; n <= y.hi(); ++n) {
    out.bases.push_back(hom_basis(a, y.obj_at(n)));
    objs.push_back(vect_obj(static_cast<int>(out.bases.back().size())));
  }
  std::vector<Mor> diffs;
  for (int n = y.lo; n < y.hi(); ++n) {
    const auto& bn = out.bases[n - y.lo];
    const auto& bn1 = out.bases[n + 1 - y.lo];
    Matrix m(static_cast<int>(bn1.size()), static_cast<int>(bn.size()));
    for (size_t j = 0; j < bn.size(); ++j) {
      Matrix col = mor_coords(bn1, compose(y.d(n), bn[j]));
      for (int i = 0; i < m.rows(); ++i) m.at(i, static_cast<int>(j)) = col.at(i, 0);
    }
    diffs.push_back(Mor{objs[n - y.lo], objs[n + 1 - y.lo], {m}});
  }
  out.cx = make_complex(vb, y.lo, std::move(objs), std::move(diffs));
  return out;
}

HomCochain hom_cochain_contravariant(const Complex& x, const Obj& a) {
  HomCochain out;
  Backend vb{BackendKind::VectFp};
  if (x.empty()) {
    out.cx = zero_complex(vb);
    return out;
  }
  int lo = -x.hi(), hi = -x.lo;
  std::vector<Obj> objs;
  for (int n = lo; n <= hi; ++n) {
    out.bases.push_back(hom_basis(x.obj_at(-n), a));
    objs.push_back(vect_obj(static_cast<int>(out.bases.back().size())));
  }
  std::vector<Mor> diffs;
  for (int n = lo; n < hi; ++n) {
    const auto& bn = out.bases[n - lo];
    const auto& bn1 = out.bases[n + 1 - lo];
    Matrix m(static_cast<int>(bn1.size()), static_cast<int>(bn.size()));
    for (size_t j = 0; j < bn.size(); ++j) {
      Matrix col = mor_coords(bn1, compose(bn[j], x.d(-n - 1)));
      for (int i = 0; i < m.rows(); ++i) m.at(i, static_cast<int>(j)) = col.at(i, 0);
    }
    diffs.push_back(Mor{objs[n - lo], objs[n + 1 - lo], {m}});
  }
  out.cx = make_complex(vb, lo, std::move(objs), std::move(diffs));
  return out;
}

Obj ext_group(const Obj& a, const Obj& b, int k) {
  require(k >= 0, ErrKind::PreconditionViolation, "ext degree must be nonnegative");
  auto res = inj_res_object(b, k + 2);
  auto hc = hom_cochain_covariant(a, res.res);
  return cohomology_obj(hc.cx, k);
}

}  // namespace resolvent
