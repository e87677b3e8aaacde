#include "resolvent/bicomplexes.hpp"

#include <algorithm>
#include <functional>

#include "resolvent/resolutions.hpp"

namespace resolvent {

Obj Bicomplex::obj_at(int r, int c) const {
  if (empty() || r < r0 || r > r1 || c < c0 || c > c1) return zero_obj(backend);
  return objs[(r - r0) * width() + (c - c0)];
}

Mor Bicomplex::d0_at(int r, int c) const {
  if (empty() || r < r0 || r > r1 || c < c0 || c > c1)
    return zero_mor(obj_at(r, c), obj_at(r, c + 1));
  return d0[(r - r0) * width() + (c - c0)];
}

Mor Bicomplex::d1_at(int r, int c) const {
  if (empty() || r < r0 || r > r1 || c < c0 || c > c1)
    return zero_mor(obj_at(r, c), obj_at(r + 1, c));
  return d1[(r - r0) * width() + (c - c0)];
}

Bicomplex make_bicomplex(const Backend& b, bool anticommute, int r0, int c0,
                         std::vector<std::vector<Obj>> rows,
                         std::vector<std::vector<Mor>> d0_rows,
                         std::vector<std::vector<Mor>> d1_rows) {
  Bicomplex out;
  out.backend = b;
  out.anticommute = anticommute;
  out.r0 = r0;
  out.c0 = c0;
  out.r1 = r0 + static_cast<int>(rows.size()) - 1;
  int w = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  out.c1 = c0 + w - 1;
  require(rows.size() == d0_rows.size() && rows.size() == d1_rows.size(), ErrKind::ShapeMismatch,
          "bicomplex row counts");
  for (size_t i = 0; i < rows.size(); ++i) {
    require(static_cast<int>(rows[i].size()) == w && static_cast<int>(d0_rows[i].size()) == w &&
                static_cast<int>(d1_rows[i].size()) == w,
            ErrKind::ShapeMismatch, "bicomplex row widths");
    for (auto& o : rows[i]) out.objs.push_back(o);
    for (auto& m : d0_rows[i]) out.d0.push_back(m);
    for (auto& m : d1_rows[i]) out.d1.push_back(m);
  }
  for (int r = out.r0; r <= out.r1; ++r)
    for (int c = out.c0; c <= out.c1; ++c) {
      require(out.d0_at(r, c).dom == out.obj_at(r, c) &&
                  out.d0_at(r, c).cod == out.obj_at(r, c + 1),
              ErrKind::DomainMismatch, "d0 endpoints");
      require(out.d1_at(r, c).dom == out.obj_at(r, c) &&
                  out.d1_at(r, c).cod == out.obj_at(r + 1, c),
              ErrKind::DomainMismatch, "d1 endpoints");
      require(mor_is_zero(compose(out.d0_at(r, c + 1), out.d0_at(r, c))), ErrKind::InvalidObject,
              "d0 rows are not complexes");
      require(mor_is_zero(compose(out.d1_at(r + 1, c), out.d1_at(r, c))), ErrKind::InvalidObject,
              "d1 columns are not complexes");
      Mor a = compose(out.d1_at(r, c + 1), out.d0_at(r, c));
      Mor bb = compose(out.d0_at(r + 1, c), out.d1_at(r, c));
      if (anticommute)
        require(mor_is_zero(mor_add(a, bb)), ErrKind::InvalidObject, "squares do not anticommute");
      else
        require(a == bb, ErrKind::InvalidObject, "squares do not commute");
    }
  return out;
}

Bicomplex sign_trick(const Bicomplex& b) {
  Bicomplex out = b;
  out.anticommute = !b.anticommute;
  for (int r = b.r0; r <= b.r1; ++r)
    for (int c = b.c0; c <= b.c1; ++c)
      if (((c % 2) + 2) % 2 == 1) {
        Mor& m = out.d1[(r - b.r0) * b.width() + (c - b.c0)];
        m = mor_neg(m);
      }
  return out;
}

Bicomplex unsign(const Bicomplex& b) { return sign_trick(b); }

Mor Totalization::inj(int r, int c) const {
  int n = r + c - n_lo;
  const auto& rows = rows_present[n];
  auto it = std::find(rows.begin(), rows.end(), r);
  require(it != rows.end(), ErrKind::DomainMismatch, "no summand at that position");
  return parts[n].inj[it - rows.begin()];
}

Mor Totalization::proj(int r, int c) const {
  int n = r + c - n_lo;
  const auto& rows = rows_present[n];
  auto it = std::find(rows.begin(), rows.end(), r);
  require(it != rows.end(), ErrKind::DomainMismatch, "no summand at that position");
  return parts[n].proj[it - rows.begin()];
}

namespace {

Totalization tot_grid(const Backend& bk, int r0, int r1, int c0, int c1,
                      const std::function<Obj(int, int)>& obj_at,
                      const std::function<std::vector<std::pair<std::pair<int, int>, Mor>>(int, int)>&
                          out_components) {
  Totalization t;
  if (r1 < r0 || c1 < c0) {
    t.cx = zero_complex(bk);
    return t;
  }
  int n_lo = r0 + c0, n_hi = r1 + c1;
  t.n_lo = n_lo;
  std::vector<Obj> objs;
  for (int n = n_lo; n <= n_hi; ++n) {
    std::vector<int> rows;
    std::vector<Obj> summands;
    for (int r = r0; r <= r1; ++r) {
      int c = n - r;
      if (c < c0 || c > c1) continue;
      rows.push_back(r);
      summands.push_back(obj_at(r, c));
    }
    auto bp = biproduct(summands);
    t.rows_present.push_back(rows);
    t.parts.push_back(bp);
    objs.push_back(bp.obj);
  }
  std::vector<Mor> diffs;
  for (int n = n_lo; n < n_hi; ++n) {
    Mor d = zero_mor(objs[n - n_lo], objs[n + 1 - n_lo]);
    const auto& rows = t.rows_present[n - n_lo];
    for (size_t i = 0; i < rows.size(); ++i) {
      int r = rows[i], c = n - r;
      for (const auto& [target, m] : out_components(r, c)) {
        auto [tr, tc] = target;
        if (tr + tc != n + 1) continue;
        const auto& nrows = t.rows_present[n + 1 - n_lo];
        auto it = std::find(nrows.begin(), nrows.end(), tr);
        if (it == nrows.end()) continue;
        d = mor_add(d, compose(compose(t.parts[n + 1 - n_lo].inj[it - nrows.begin()], m),
                               t.parts[n - n_lo].proj[i]));
      }
    }
    diffs.push_back(d);
  }
  t.cx = make_complex(bk, n_lo, std::move(objs), std::move(diffs));
  return t;
}

}  // namespace

Totalization tot_bicomplex(const Bicomplex& b) {
  require(b.anticommute, ErrKind::PreconditionViolation,
          "totalization needs the anticommuting convention (apply sign_trick first)");
  return tot_grid(
      b.backend, b.r0, b.r1, b.c0, b.c1, [&](int r, int c) { return b.obj_at(r, c); },
      [&](int r, int c) {
        std::vector<std::pair<std::pair<int, int>, Mor>> out;
        out.push_back({{r, c + 1}, b.d0_at(r, c)});
        out.push_back({{r + 1, c}, b.d1_at(r, c)});
        return out;
      });
}

Obj Multicomplex::obj_at(int r, int c) const {
  if (empty() || r < r0 || r > r1 || c < c0 || c > c1) return zero_obj(backend);
  return objs[(r - r0) * width() + (c - c0)];
}

Mor Multicomplex::d_at(int k, int r, int c) const {
  if (k >= 0 && k < static_cast<int>(ds.size())) {
    auto it = ds[k].find({r, c});
    if (it != ds[k].end()) return it->second;
  }
  return zero_mor(obj_at(r, c), obj_at(r + k, c + 1 - k));
}

Multicomplex make_multicomplex(const Backend& b, int r0, int c0,
                               std::vector<std::vector<Obj>> rows,
                               std::vector<std::map<std::pair<int, int>, Mor>> ds) {
  Multicomplex out;
  out.backend = b;
  out.r0 = r0;
  out.c0 = c0;
  out.r1 = r0 + static_cast<int>(rows.size()) - 1;
  int w = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  out.c1 = c0 + w - 1;
  for (auto& row : rows) {
    require(static_cast<int>(row.size()) == w, ErrKind::ShapeMismatch, "multicomplex row widths");
    for (auto& o : row) out.objs.push_back(o);
  }
  out.ds = std::move(ds);
  int K = static_cast<int>(out.ds.size());
  for (int k = 0; k < K; ++k)
    for (const auto& [pos, m] : out.ds[k])
      require(m.dom == out.obj_at(pos.first, pos.second) &&
                  m.cod == out.obj_at(pos.first + k, pos.second + 1 - k),
              ErrKind::DomainMismatch, "multicomplex differential endpoints");
  // sum_{i+j=n} d_i d_j = 0 at every position
  for (int n = 0; n <= 2 * (K - 1); ++n)
    for (int r = out.r0; r <= out.r1; ++r)
      for (int c = out.c0; c <= out.c1; ++c) {
        Mor acc = zero_mor(out.obj_at(r, c), out.obj_at(r + n, c + 2 - n));
        for (int j = std::max(0, n - K + 1); j <= std::min(n, K - 1); ++j) {
          int i = n - j;
          acc = mor_add(acc, compose(out.d_at(i, r + j, c + 1 - j), out.d_at(j, r, c)));
        }
        require(mor_is_zero(acc), ErrKind::MulticomplexCondition,
                "multicomplex differential identity fails");
      }
  return out;
}

Totalization tot_multicomplex(const Multicomplex& m) {
  int K = static_cast<int>(m.ds.size());
  return tot_grid(
      m.backend, m.r0, m.r1, m.c0, m.c1, [&](int r, int c) { return m.obj_at(r, c); },
      [&](int r, int c) {
        std::vector<std::pair<std::pair<int, int>, Mor>> out;
        for (int k = 0; k < K; ++k) out.push_back({{r + k, c + 1 - k}, m.d_at(k, r, c)});
        return out;
      });
}

bool check_multicomplex_morphism(const Multicomplex& src, const Multicomplex& dst,
                                 const std::vector<std::map<std::pair<int, int>, Mor>>& phis) {
  auto phi_at = [&](int k, int r, int c) -> Mor {
    if (k >= 0 && k < static_cast<int>(phis.size())) {
      auto it = phis[k].find({r, c});
      if (it != phis[k].end()) return it->second;
    }
    return zero_mor(src.obj_at(r, c), dst.obj_at(r + k, c - k));
  };
  int K = std::max({static_cast<int>(src.ds.size()), static_cast<int>(dst.ds.size()),
                    static_cast<int>(phis.size())});
  int r0 = std::min(src.r0, dst.r0), r1 = std::max(src.r1, dst.r1);
  int c0 = std::min(src.c0, dst.c0), c1 = std::max(src.c1, dst.c1);
  for (int n = 0; n <= 2 * K; ++n)
    for (int r = r0; r <= r1; ++r)
      for (int c = c0; c <= c1; ++c) {
        // target bidegree (r+n, c+1-n)
        Mor acc = zero_mor(src.obj_at(r, c), dst.obj_at(r + n, c + 1 - n));
        for (int j = 0; j <= n; ++j) {
          int i = n - j;
          // phi_i after d_j: d_j lands at (r+j, c+1-j)
          acc = mor_add(acc, compose(phi_at(i, r + j, c + 1 - j), src.d_at(j, r, c)));
          // minus d_i after phi_j: phi_j lands at (r+j, c-j)
          acc = mor_sub(acc, compose(dst.d_at(i, r + j, c - j), phi_at(j, r, c)));
        }
        if (!mor_is_zero(acc)) return false;
      }
  return true;
}

TrivialDiffResult trivial_diff_multicomplex(const Complex& x, int depth) {
  require(depth >= 1, ErrKind::PreconditionViolation, "depth must be >= 1");
  TrivialDiffResult out;
  if (x.empty()) {
    out.mc = make_multicomplex(x.backend, 0, 0, {}, {});
    return out;
  }
  std::vector<ObjectResolution> cols;
  for (int n = x.lo; n <= x.hi(); ++n) cols.push_back(inj_res_object(x.obj_at(n), depth));
  std::vector<std::vector<Obj>> rows(depth);
  std::map<std::pair<int, int>, Mor> d1;
  for (int r = 0; r < depth; ++r)
    for (int n = x.lo; n <= x.hi(); ++n) {
      const auto& col = cols[n - x.lo];
      rows[r].push_back(col.res.obj_at(r));
      Mor v = col.res.d(r);
      if (!mor_is_zero(v)) d1[{r, n}] = v;
    }
  out.mc = make_multicomplex(x.backend, 0, x.lo, std::move(rows), {{}, std::move(d1)});
  for (int n = x.lo; n <= x.hi(); ++n) out.lambda0.push_back(cols[n - x.lo].aug);
  return out;
}

}  // namespace resolvent
