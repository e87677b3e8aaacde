#include "resolvent/abcat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace resolvent {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      uint32_t v = a.at(i, j);
      if (!v) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = fp::mul(v, b.at(k, l));
    }
  return r;
}

void check_same_backend(const Backend& a, const Backend& b) {
  require(a == b, ErrKind::BackendMismatch, "backend mismatch");
}

}  // namespace

int vertex_count(const Backend& b) { return b.kind == BackendKind::RepA2 ? 2 : 1; }

std::string backend_name(const Backend& b) {
  switch (b.kind) {
    case BackendKind::VectFp: return "vect";
    case BackendKind::NilpMod: return "nilp:" + std::to_string(b.nilp);
    case BackendKind::RepA2: return "repa2";
  }
  return "?";
}

int Obj::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

Obj vect_obj(int d) {
  require(d >= 0, ErrKind::InvalidObject, "negative dimension");
  return Obj{Backend{BackendKind::VectFp}, {d}, Matrix()};
}

Obj nilp_obj(int nilp, const Matrix& x) {
  require(nilp >= 1, ErrKind::InvalidObject, "nilpotency index must be >= 1");
  require(x.rows() == x.cols(), ErrKind::InvalidObject, "operator must be square");
  require(mat_pow(x, nilp).is_zero(), ErrKind::InvalidObject, "operator fails x^n = 0");
  return Obj{Backend{BackendKind::NilpMod, nilp}, {x.rows()}, x};
}

Obj nilp_regular(int nilp) {
  Matrix j(nilp, nilp);
  for (int i = 0; i + 1 < nilp; ++i) j.at(i + 1, i) = 1;
  return nilp_obj(nilp, j);
}

Obj repa2_obj(const Matrix& f) {
  return Obj{Backend{BackendKind::RepA2}, {f.cols(), f.rows()}, f};
}

Obj repa2_obj(int d1, int d2, const Matrix& f) {
  require(f.rows() == d2 && f.cols() == d1, ErrKind::InvalidObject, "structure map shape");
  return repa2_obj(f);
}

Obj zero_obj(const Backend& b) {
  switch (b.kind) {
    case BackendKind::VectFp: return vect_obj(0);
    case BackendKind::NilpMod: return Obj{b, {0}, Matrix(0, 0)};
    case BackendKind::RepA2: return Obj{b, {0, 0}, Matrix(0, 0)};
  }
  fail(ErrKind::InvalidObject, "unknown backend");
}

Mor make_mor(const Obj& dom, const Obj& cod, std::vector<Matrix> comp) {
  check_same_backend(dom.backend, cod.backend);
  int nv = vertex_count(dom.backend);
  require(static_cast<int>(comp.size()) == nv, ErrKind::InvalidMorphism, "component count");
  for (int v = 0; v < nv; ++v)
    require(comp[v].rows() == cod.dims[v] && comp[v].cols() == dom.dims[v],
            ErrKind::InvalidMorphism, "component shape");
  switch (dom.backend.kind) {
    case BackendKind::VectFp: break;
    case BackendKind::NilpMod:
      require(comp[0] * dom.op == cod.op * comp[0], ErrKind::InvalidMorphism,
              "morphism does not commute with the operator");
      break;
    case BackendKind::RepA2:
      require(comp[1] * dom.op == cod.op * comp[0], ErrKind::InvalidMorphism,
              "morphism does not commute with the structure map");
      break;
  }
  return Mor{dom, cod, std::move(comp)};
}

Mor id_mor(const Obj& a) {
  std::vector<Matrix> comp;
  for (int d : a.dims) comp.push_back(Matrix::identity(d));
  return Mor{a, a, std::move(comp)};
}

Mor zero_mor(const Obj& dom, const Obj& cod) {
  check_same_backend(dom.backend, cod.backend);
  std::vector<Matrix> comp;
  for (int v = 0; v < vertex_count(dom.backend); ++v)
    comp.push_back(Matrix::zero(cod.dims[v], dom.dims[v]));
  return Mor{dom, cod, std::move(comp)};
}

Mor compose(const Mor& g, const Mor& f) {
  require(f.cod == g.dom, ErrKind::DomainMismatch, "compose: middle objects differ");
  std::vector<Matrix> comp;
  for (size_t v = 0; v < f.comp.size(); ++v) comp.push_back(g.comp[v] * f.comp[v]);
  return Mor{f.dom, g.cod, std::move(comp)};
}

Mor mor_add(const Mor& f, const Mor& g) {
  require(f.dom == g.dom && f.cod == g.cod, ErrKind::DomainMismatch, "mor_add shapes");
  std::vector<Matrix> comp;
  for (size_t v = 0; v < f.comp.size(); ++v) comp.push_back(f.comp[v] + g.comp[v]);
  return Mor{f.dom, f.cod, std::move(comp)};
}

Mor mor_sub(const Mor& f, const Mor& g) { return mor_add(f, mor_neg(g)); }

Mor mor_neg(const Mor& f) {
  std::vector<Matrix> comp;
  for (const auto& c : f.comp) comp.push_back(-c);
  return Mor{f.dom, f.cod, std::move(comp)};
}

bool mor_is_zero(const Mor& f) {
  for (const auto& c : f.comp)
    if (!c.is_zero()) return false;
  return true;
}

bool is_mono(const Mor& f) {
  for (const auto& c : f.comp)
    if (rank(c) != c.cols()) return false;
  return true;
}

bool is_epi(const Mor& f) {
  for (const auto& c : f.comp)
    if (rank(c) != c.rows()) return false;
  return true;
}

bool is_iso(const Mor& f) {
  for (const auto& c : f.comp)
    if (c.rows() != c.cols() || rank(c) != c.rows()) return false;
  return true;
}

std::optional<Mor> mor_inverse(const Mor& f) {
  std::vector<Matrix> comp;
  for (const auto& c : f.comp) {
    auto inv = inverse(c);
    if (!inv) return std::nullopt;
    comp.push_back(*inv);
  }
  return make_mor(f.cod, f.dom, std::move(comp));
}

SubQuotient kernel(const Mor& f) {
  const Obj& a = f.dom;
  switch (a.backend.kind) {
    case BackendKind::VectFp: {
      Matrix k = kernel_basis(f.comp[0]);
      return {vect_obj(k.cols()), Mor{vect_obj(k.cols()), a, {k}}};
    }
    case BackendKind::NilpMod: {
      Matrix k = kernel_basis(f.comp[0]);
      // ker is X-invariant, so the restricted operator exists
      Matrix xk = solve(k, a.op * k).value();
      Obj K = nilp_obj(a.backend.nilp, xk);
      return {K, make_mor(K, a, {k})};
    }
    case BackendKind::RepA2: {
      Matrix k1 = kernel_basis(f.comp[0]);
      Matrix k2 = kernel_basis(f.comp[1]);
      Matrix fk = solve(k2, a.op * k1).value();
      Obj K = repa2_obj(k1.cols(), k2.cols(), fk);
      return {K, make_mor(K, a, {k1, k2})};
    }
  }
  fail(ErrKind::InvalidObject, "unknown backend");
}

namespace {
struct VertexCoker {
  Matrix proj;     // Q-coordinates of the ambient space
  Matrix section;  // unit-vector complement columns, proj*section = id
};

VertexCoker vertex_cokernel(const Matrix& comp, int ambient_dim) {
  Matrix c = column_space_basis(comp);
  Matrix e = extend_to_basis(c);
  Matrix b = hstack(c, e);
  Matrix binv = inverse(b).value();
  Matrix proj(e.cols(), ambient_dim);
  for (int i = 0; i < e.cols(); ++i)
    for (int j = 0; j < ambient_dim; ++j) proj.at(i, j) = binv.at(c.cols() + i, j);
  return {proj, e};
}
}  // namespace

SubQuotient cokernel(const Mor& f) {
  const Obj& b = f.cod;
  switch (b.backend.kind) {
    case BackendKind::VectFp: {
      auto vc = vertex_cokernel(f.comp[0], b.dims[0]);
      Obj Q = vect_obj(vc.proj.rows());
      return {Q, Mor{b, Q, {vc.proj}}};
    }
    case BackendKind::NilpMod: {
      auto vc = vertex_cokernel(f.comp[0], b.dims[0]);
      // X preserves im(f) so the quotient operator is proj * X * section
      Matrix xq = vc.proj * (b.op * vc.section);
      Obj Q = nilp_obj(b.backend.nilp, xq);
      return {Q, make_mor(b, Q, {vc.proj})};
    }
    case BackendKind::RepA2: {
      auto v1 = vertex_cokernel(f.comp[0], b.dims[0]);
      auto v2 = vertex_cokernel(f.comp[1], b.dims[1]);
      Matrix fq = v2.proj * (b.op * v1.section);
      Obj Q = repa2_obj(v1.proj.rows(), v2.proj.rows(), fq);
      return {Q, make_mor(b, Q, {v1.proj, v2.proj})};
    }
  }
  fail(ErrKind::InvalidObject, "unknown backend");
}

ImageParts image(const Mor& f) {
  const Obj& b = f.cod;
  std::vector<Matrix> bases, epis;
  for (size_t v = 0; v < f.comp.size(); ++v) {
    Matrix c = column_space_basis(f.comp[v]);
    bases.push_back(c);
    epis.push_back(solve(c, f.comp[v]).value());
  }
  Obj I;
  switch (b.backend.kind) {
    case BackendKind::VectFp: I = vect_obj(bases[0].cols()); break;
    case BackendKind::NilpMod:
      I = nilp_obj(b.backend.nilp, solve(bases[0], b.op * bases[0]).value());
      break;
    case BackendKind::RepA2:
      I = repa2_obj(bases[0].cols(), bases[1].cols(), solve(bases[1], b.op * bases[0]).value());
      break;
  }
  return {I, make_mor(I, b, bases), make_mor(f.dom, I, epis)};
}

Biproduct biproduct(const std::vector<Obj>& parts) {
  require(!parts.empty(), ErrKind::InvalidObject, "biproduct of empty list needs a backend");
  Backend bk = parts[0].backend;
  int nv = vertex_count(bk);
  std::vector<int> dims(nv, 0);
  for (const auto& p : parts) {
    check_same_backend(p.backend, bk);
    for (int v = 0; v < nv; ++v) dims[v] += p.dims[v];
  }
  std::vector<Matrix> ops;
  for (const auto& p : parts) ops.push_back(p.op);
  Obj total;
  switch (bk.kind) {
    case BackendKind::VectFp: total = vect_obj(dims[0]); break;
    case BackendKind::NilpMod: total = nilp_obj(bk.nilp, block_diag(ops)); break;
    case BackendKind::RepA2: total = repa2_obj(dims[0], dims[1], block_diag(ops)); break;
  }
  Biproduct out{total, {}, {}};
  std::vector<int> off(nv, 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inj, proj;
    for (int v = 0; v < nv; ++v) {
      Matrix in(dims[v], p.dims[v]), pr(p.dims[v], dims[v]);
      for (int i = 0; i < p.dims[v]; ++i) {
        in.at(off[v] + i, i) = 1;
        pr.at(i, off[v] + i) = 1;
      }
      inj.push_back(in);
      proj.push_back(pr);
      off[v] += p.dims[v];
    }
    out.inj.push_back(make_mor(p, total, inj));
    out.proj.push_back(make_mor(total, p, proj));
  }
  return out;
}

PushoutResult pushout(const Mor& f, const Mor& g) {
  require(f.dom == g.dom, ErrKind::DomainMismatch, "pushout needs a common domain");
  auto bp = biproduct({f.cod, g.cod});
  Mor h = mor_sub(compose(bp.inj[0], f), compose(bp.inj[1], g));
  auto q = cokernel(h);
  return {q.obj, compose(q.map, bp.inj[0]), compose(q.map, bp.inj[1])};
}

std::vector<Matrix> nilpotent_jordan_chains(const Matrix& x) {
  int d = x.rows();
  if (d == 0) return {};
  // height h: least power with x^h = 0
  int h = 0;
  {
    Matrix pw = Matrix::identity(d);
    while (!pw.is_zero()) {
      pw = pw * x;
      ++h;
      require(h <= d + 1, ErrKind::PreconditionViolation, "operator is not nilpotent");
    }
  }
  std::vector<Matrix> kerbases(h + 1);  // kerbases[j] = basis of ker(x^j)
  for (int j = 0; j <= h; ++j) kerbases[j] = kernel_basis(mat_pow(x, j));

  struct Chain {
    Matrix top;
    int len;
  };
  std::vector<Chain> chains;
  for (int j = h; j >= 1; --j) {
    // span to avoid: ker(x^(j-1)) plus existing chain elements of height j
    std::vector<Matrix> avoid = {kerbases[j - 1]};
    for (const auto& ch : chains)
      if (ch.len > j) avoid.push_back(mat_pow(x, ch.len - j) * ch.top);
    Matrix base = hstack(avoid, d);
    int r = rank(base);
    for (int c = 0; c < kerbases[j].cols(); ++c) {
      Matrix cand = kerbases[j].col(c);
      Matrix trial = hstack(base, cand);
      if (rank(trial) > r) {
        base = trial;
        ++r;
        chains.push_back({cand, j});
      }
    }
  }
  std::vector<Matrix> out;
  for (const auto& ch : chains) {
    Matrix m(d, ch.len);
    Matrix v = ch.top;
    for (int k = 0; k < ch.len; ++k) {
      for (int i = 0; i < d; ++i) m.at(i, k) = v.at(i, 0);
      v = x * v;
    }
    out.push_back(m);
  }
  return out;
}

bool is_injective_obj(const Obj& a) {
  switch (a.backend.kind) {
    case BackendKind::VectFp: return true;
    case BackendKind::NilpMod: {
      for (const auto& ch : nilpotent_jordan_chains(a.op))
        if (ch.cols() != a.backend.nilp) return false;
      return true;
    }
    case BackendKind::RepA2: return rank(a.op) == a.dims[1];  // structure map surjective
  }
  fail(ErrKind::InvalidObject, "unknown backend");
}

Mor injective_envelope(const Obj& a) {
  switch (a.backend.kind) {
    case BackendKind::VectFp: return id_mor(a);
    case BackendKind::NilpMod: {
      int n = a.backend.nilp, d = a.dims[0];
      auto chains = nilpotent_jordan_chains(a.op);
      int m = static_cast<int>(chains.size());
      Obj env = m == 0 ? zero_obj(a.backend) : [&] {
        std::vector<Obj> copies(m, nilp_regular(n));
        return biproduct(copies).obj;
      }();
      // chain of length l embeds in k[x]/(x^n) by multiplication with x^(n-l)
      Matrix basis(d, d), targets(env.dims[0], d);
      int col = 0;
      for (int i = 0; i < m; ++i) {
        int l = chains[i].cols();
        for (int k = 0; k < l; ++k) {
          for (int r = 0; r < d; ++r) basis.at(r, col) = chains[i].at(r, k);
          targets.at(i * n + (n - l) + k, col) = 1;
          ++col;
        }
      }
      Matrix u = targets * inverse(basis).value();
      return make_mor(a, env, {u});
    }
    case BackendKind::RepA2: {
      // M = S1^c1 + I2^r + S2^c2 with r = rank f; envelope S1^c1 + I2^(r+c2)
      Matrix kf = kernel_basis(a.op);             // c1 columns in V1
      Matrix c = extend_to_basis(column_space_basis(kf));  // complement in V1, r columns
      Matrix imf = a.op * c;                      // basis of im f
      Matrix dcompl = extend_to_basis(column_space_basis(imf));  // c2 columns in V2
      int c1 = kf.cols(), r = c.cols(), c2 = dcompl.cols();
      Matrix f_env(r + c2, c1 + r + c2);
      for (int i = 0; i < r + c2; ++i) f_env.at(i, c1 + i) = 1;
      Obj env = repa2_obj(c1 + r + c2, r + c2, f_env);
      // u1 in the basis [kf | c]; u2 in the basis [imf | dcompl]
      Matrix t1(c1 + r + c2, c1 + r);
      for (int i = 0; i < c1 + r; ++i) t1.at(i, i) = 1;
      Matrix u1 = t1 * inverse(hstack(kf, c)).value();
      Matrix u2 = Matrix::identity(r + c2) * inverse(hstack(imf, dcompl)).value();
      return make_mor(a, env, {u1, u2});
    }
  }
  fail(ErrKind::InvalidObject, "unknown backend");
}

std::vector<Mor> hom_basis(const Obj& a, const Obj& b) {
  check_same_backend(a.backend, b.backend);
  switch (a.backend.kind) {
    case BackendKind::VectFp: {
      std::vector<Mor> out;
      for (int j = 0; j < a.dims[0]; ++j)
        for (int i = 0; i < b.dims[0]; ++i) {
          Matrix m(b.dims[0], a.dims[0]);
          m.at(i, j) = 1;
          out.push_back(Mor{a, b, {m}});
        }
      return out;
    }
    case BackendKind::NilpMod: {
      // constraint m*Xa - Xb*m = 0 on vec(m)
      Matrix c = kron(a.op.transpose(), Matrix::identity(b.dims[0])) -
                 kron(Matrix::identity(a.dims[0]), b.op);
      Matrix k = kernel_basis(c);
      std::vector<Mor> out;
      for (int j = 0; j < k.cols(); ++j)
        out.push_back(make_mor(a, b, {unvec(k.col(j), b.dims[0], a.dims[0])}));
      return out;
    }
    case BackendKind::RepA2: {
      int n1 = b.dims[0] * a.dims[0], n2 = b.dims[1] * a.dims[1];
      // constraint m2*fa - fb*m1 = 0; variables [vec(m1); vec(m2)]
      Matrix c1 = -kron(Matrix::identity(a.dims[0]), b.op);
      Matrix c2 = kron(a.op.transpose(), Matrix::identity(b.dims[1]));
      int eq = b.dims[1] * a.dims[0];
      Matrix c(eq, n1 + n2);
      for (int i = 0; i < eq; ++i) {
        for (int j = 0; j < n1; ++j) c.at(i, j) = c1.at(i, j);
        for (int j = 0; j < n2; ++j) c.at(i, n1 + j) = c2.at(i, j);
      }
      Matrix k = kernel_basis(c);
      std::vector<Mor> out;
      for (int j = 0; j < k.cols(); ++j) {
        Matrix v = k.col(j);
        Matrix v1(n1, 1), v2(n2, 1);
        for (int i = 0; i < n1; ++i) v1.at(i, 0) = v.at(i, 0);
        for (int i = 0; i < n2; ++i) v2.at(i, 0) = v.at(n1 + i, 0);
        out.push_back(make_mor(a, b, {unvec(v1, b.dims[0], a.dims[0]), unvec(v2, b.dims[1], a.dims[1])}));
      }
      return out;
    }
  }
  fail(ErrKind::InvalidObject, "unknown backend");
}

int hom_dim(const Obj& a, const Obj& b) { return static_cast<int>(hom_basis(a, b).size()); }

Matrix mor_entries_vec(const Mor& m) {
  std::vector<Matrix> parts;
  for (const auto& c : m.comp) parts.push_back(vec(c));
  return vstack(parts, 1);
}

Mor mor_from_coords(const Obj& a, const Obj& b, const std::vector<Mor>& basis, const Matrix& coords) {
  require(coords.rows() == static_cast<int>(basis.size()) && coords.cols() == 1,
          ErrKind::ShapeMismatch, "coordinate vector shape");
  Mor m = zero_mor(a, b);
  for (size_t i = 0; i < basis.size(); ++i) {
    Mor t = basis[i];
    for (auto& c : t.comp) c = scale(c, coords.at(static_cast<int>(i), 0));
    m = mor_add(m, t);
  }
  return m;
}

Matrix mor_coords(const std::vector<Mor>& basis, const Mor& m) {
  std::vector<Matrix> cols;
  for (const auto& b : basis) cols.push_back(mor_entries_vec(b));
  int h = mor_entries_vec(m).rows();
  Matrix a = hstack(cols, h);
  auto x = solve(a, mor_entries_vec(m));
  require(x.has_value(), ErrKind::PreconditionViolation, "morphism outside hom space");
  return *x;
}

namespace {
/* Find m in Hom(dom, cod) with (post ? t∘m : m∘t) = g, by a linear solve over
   the hom basis. */
std::optional<Mor> hom_solve(const Obj& dom, const Obj& cod, const Mor& t, const Mor& g, bool post) {
  auto basis = hom_basis(dom, cod);
  std::vector<Matrix> cols;
  for (const auto& b : basis) cols.push_back(mor_entries_vec(post ? compose(t, b) : compose(b, t)));
  Matrix rhs = mor_entries_vec(g);
  Matrix a = hstack(cols, rhs.rows());
  auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  return mor_from_coords(dom, cod, basis, *x);
}
}  // namespace

std::optional<Mor> find_left_factor(const Mor& u, const Mor& g) {
  require(u.dom == g.dom, ErrKind::DomainMismatch, "find_left_factor domains");
  return hom_solve(u.cod, g.cod, u, g, /*post=*/false);
}

std::optional<Mor> find_right_factor(const Mor& t, const Mor& g) {
  require(t.cod == g.cod, ErrKind::DomainMismatch, "find_right_factor codomains");
  return hom_solve(g.dom, t.dom, t, g, /*post=*/true);
}

Mor factor_through_mono(const Mor& mono, const Mor& g) {
  require(mono.cod == g.cod, ErrKind::DomainMismatch, "factor_through_mono codomains");
  std::vector<Matrix> comp;
  for (size_t v = 0; v < mono.comp.size(); ++v) {
    auto x = solve(mono.comp[v], g.comp[v]);
    require(x.has_value(), ErrKind::PreconditionViolation, "image not contained in subobject");
    comp.push_back(*x);
  }
  return make_mor(g.dom, mono.dom, std::move(comp));
}

Mor factor_through_epi(const Mor& epi, const Mor& g) {
  require(epi.dom == g.dom, ErrKind::DomainMismatch, "factor_through_epi domains");
  std::vector<Matrix> comp;
  for (size_t v = 0; v < epi.comp.size(); ++v) {
    auto x = solve_left(epi.comp[v], g.comp[v]);
    require(x.has_value(), ErrKind::PreconditionViolation, "map does not kill the kernel");
    comp.push_back(*x);
  }
  return make_mor(epi.cod, g.cod, std::move(comp));
}

bool is_split_epi(const Mor& f) { return splitting_of_epi(f).has_value(); }

std::optional<Mor> splitting_of_epi(const Mor& f) { return find_right_factor(f, id_mor(f.cod)); }

Obj random_obj(const Backend& b, std::mt19937_64& rng, int max_dim) {
  std::uniform_int_distribution<int> dd(0, max_dim);
  switch (b.kind) {
    case BackendKind::VectFp: return vect_obj(dd(rng));
    case BackendKind::NilpMod: {
      int d = dd(rng);
      // random Jordan type with parts <= n, conjugated by a random basis change
      std::vector<int> parts;
      int rem = d;
      while (rem > 0) {
        std::uniform_int_distribution<int> pp(1, std::min(b.nilp, rem));
        int l = pp(rng);
        parts.push_back(l);
        rem -= l;
      }
      Matrix j(d, d);
      int off = 0;
      for (int l : parts) {
        for (int i = 0; i + 1 < l; ++i) j.at(off + i + 1, off + i) = 1;
        off += l;
      }
      Matrix p(0, 0);
      do {
        p = random_matrix(rng, d, d);
      } while (!inverse(p));
      return nilp_obj(b.nilp, p * j * inverse(p).value());
    }
    case BackendKind::RepA2: {
      int d1 = dd(rng), d2 = dd(rng);
      return repa2_obj(d1, d2, random_matrix(rng, d2, d1));
    }
  }
  fail(ErrKind::InvalidObject, "unknown backend");
}

Mor random_mor(std::mt19937_64& rng, const Obj& a, const Obj& b) {
  auto basis = hom_basis(a, b);
  if (basis.empty()) return zero_mor(a, b);
  Matrix coords = random_matrix(rng, static_cast<int>(basis.size()), 1);
  return mor_from_coords(a, b, basis, coords);
}

std::string iso_type(const Obj& a) {
  std::ostringstream os;
  switch (a.backend.kind) {
    case BackendKind::VectFp:
      os << "k^" << a.dims[0];
      break;
    case BackendKind::NilpMod: {
      std::map<int, int, std::greater<int>> mult;
      for (const auto& ch : nilpotent_jordan_chains(a.op)) ++mult[ch.cols()];
      if (mult.empty()) {
        os << "0";
      } else {
        bool first = true;
        for (auto [len, m] : mult) {
          if (!first) os << " + ";
          first = false;
          os << "J" << len;
          if (m > 1) os << "^" << m;
        }
      }
      break;
    }
    case BackendKind::RepA2: {
      int r = rank(a.op), c1 = a.dims[0] - r, c2 = a.dims[1] - r;
      if (c1 == 0 && r == 0 && c2 == 0) {
        os << "0";
      } else {
        bool first = true;
        auto piece = [&](const char* name, int m) {
          if (m == 0) return;
          if (!first) os << " + ";
          first = false;
          os << name;
          if (m > 1) os << "^" << m;
        };
        piece("S1", c1);
        piece("I2", r);
        piece("S2", c2);
      }
      break;
    }
  }
  return os.str();
}

}  // namespace resolvent
