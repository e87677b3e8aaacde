#include "resolvent/towers.hpp"

#include <algorithm>

namespace resolvent {

namespace {

/* Append disks of the target terms at every degree where t is not a split
   epi, so the corrected map is degreewise split epi. The source augmentation
   is pushed through the inclusion of the original summand. */
void pad_until_split(Complex& src, ChainMap& t, ChainMap& lambda_src) {
  const Complex dst = t.dst;
  std::vector<Complex> parts = {src};
  std::vector<int> pad_degrees;
  for (int m = dst.lo; m <= dst.hi(); ++m) {
    if (dst.obj_at(m).is_zero()) continue;
    if (!is_split_epi(t.at(m))) {
      pad_degrees.push_back(m);
      parts.push_back(disk(m, dst.obj_at(m)));
    }
  }
  if (pad_degrees.empty()) return;
  Complex padded = direct_sum(parts);
  // inclusions/projections of the direct sum, reconstructed degreewise
  int lo = padded.lo;
  std::vector<Mor> tcomps, icomps;
  for (int m = lo; m <= padded.hi(); ++m) {
    std::vector<Obj> summands;
    for (const auto& p : parts) summands.push_back(p.obj_at(m));
    auto bp = biproduct(summands);
    // t on the original summand, the canonical disk maps (id, d) on the pads
    Mor tm = compose(t.at(m), bp.proj[0]);
    for (size_t k = 0; k < pad_degrees.size(); ++k) {
      int i = pad_degrees[k];
      if (m == i)
        tm = mor_add(tm, bp.proj[k + 1]);
      else if (m == i + 1)
        tm = mor_add(tm, compose(dst.d(i), bp.proj[k + 1]));
    }
    tcomps.push_back(tm);
    icomps.push_back(bp.inj[0]);
  }
  ChainMap incl = make_chain_map(src, padded, lo, std::move(icomps));
  ChainMap tnew = make_chain_map(padded, dst, lo, std::move(tcomps));
  lambda_src = compose(incl, lambda_src);
  src = padded;
  t = tnew;
}

}  // namespace

Tower build_tower(const Complex& x, int levels, int depth) {
  require(levels >= 0, ErrKind::PreconditionViolation, "levels must be nonnegative");
  require(depth >= 2, ErrKind::DepthInsufficient, "tower needs depth >= 2");
  require(!x.empty(), ErrKind::PreconditionViolation, "tower target must be nonzero");
  Tower tw;
  tw.target = x;
  tw.levels = levels;
  tw.depth = depth;
  for (int n = 0; n <= levels; ++n) {
    auto tr = truncate_left(x, -n);
    tw.truncations.push_back(tr.cx);
    tw.trunc_projs.push_back(tr.map);
    // deeper levels carry one more resolved degree
    auto pr = inj_res_bounded_below(tr.cx.empty() ? zero_complex(x.backend) : tr.cx, depth + n);
    tw.es.push_back(pr.res);
    tw.lambdas.push_back(tr.cx.empty() ? zero_chain_map(tr.cx, pr.res) : pr.lambda);
    tw.window_his.push_back(pr.window_hi);
  }
  for (int n = 0; n < levels; ++n) {
    // truncation transition: factor the coarser projection through the finer one
    std::vector<Mor> comps;
    int lo = tw.truncations[n + 1].lo;
    for (int m = lo; m <= tw.truncations[n + 1].hi(); ++m)
      comps.push_back(
          factor_through_epi(tw.trunc_projs[n + 1].at(m), tw.trunc_projs[n].at(m)));
    tw.rhos.push_back(
        make_chain_map(tw.truncations[n + 1], tw.truncations[n], lo, std::move(comps)));
    ChainMap rhs = compose(tw.lambdas[n], tw.rhos[n]);
    auto t = solve_chain_map_through(tw.es[n + 1], tw.es[n], tw.lambdas[n + 1], rhs);
    require(t.has_value(), ErrKind::NoLift, "no transition lift between tower levels");
    pad_until_split(tw.es[n + 1], *t, tw.lambdas[n + 1]);
    tw.ts.push_back(*t);
  }
  return tw;
}

TowerLimit finite_limit(const Tower& t) {
  require(t.levels >= 1, ErrKind::PreconditionViolation, "limit needs at least two levels");
  TowerLimit out;
  int N = t.levels;
  std::vector<Complex> all(t.es.begin(), t.es.end());
  std::vector<Complex> front(t.es.begin(), t.es.end() - 1);
  Complex pa = direct_sum(all);
  Complex pf = N == 0 ? zero_complex(t.target.backend) : direct_sum(front);
  int lo = pa.lo;
  // (1-t) and the degreewise kernels
  std::vector<Mor> diff_comps;
  std::vector<SubQuotient> kers;
  for (int m = lo; m <= pa.hi(); ++m) {
    std::vector<Obj> s_all, s_front;
    for (int n = 0; n <= N; ++n) s_all.push_back(t.es[n].obj_at(m));
    for (int n = 0; n < N; ++n) s_front.push_back(t.es[n].obj_at(m));
    auto bpa = biproduct(s_all);
    auto bpf = biproduct(s_front);
    Mor f = zero_mor(bpa.obj, bpf.obj);
    for (int n = 0; n < N; ++n)
      f = mor_add(f, compose(bpf.inj[n],
                             mor_sub(bpa.proj[n], compose(t.ts[n].at(m), bpa.proj[n + 1]))));
    diff_comps.push_back(f);
    kers.push_back(kernel(f));
  }
  ChainMap one_minus_t =
      N == 0 ? zero_chain_map(pa, pf) : make_chain_map(pa, pf, lo, std::move(diff_comps));
  // limit complex: induced differentials on the kernels
  std::vector<Obj> lobjs;
  std::vector<Mor> ldiffs;
  for (int m = lo; m <= pa.hi(); ++m) {
    lobjs.push_back(kers[m - lo].obj);
    if (m < pa.hi())
      ldiffs.push_back(
          factor_through_mono(kers[m + 1 - lo].map, compose(pa.d(m), kers[m - lo].map)));
  }
  out.lim = make_complex(t.target.backend, lo, std::move(lobjs), std::move(ldiffs));
  // projections to the levels
  for (int n = 0; n <= N; ++n) {
    std::vector<Mor> comps;
    for (int m = lo; m <= pa.hi(); ++m) {
      std::vector<Obj> s_all;
      for (int k = 0; k <= N; ++k) s_all.push_back(t.es[k].obj_at(m));
      auto bpa = biproduct(s_all);
      comps.push_back(compose(bpa.proj[n], kers[m - lo].map));
    }
    out.projs.push_back(make_chain_map(out.lim, t.es[n], lo, std::move(comps)));
  }
  // augmentation from the compatible family lambda_n o proj_n
  std::vector<Mor> acomp;
  for (int m = t.target.lo; m <= t.target.hi(); ++m) {
    std::vector<Obj> s_all;
    for (int k = 0; k <= N; ++k) s_all.push_back(t.es[k].obj_at(m));
    auto bpa = biproduct(s_all);
    Mor into_pa = zero_mor(t.target.obj_at(m), bpa.obj);
    for (int n = 0; n <= N; ++n)
      into_pa = mor_add(into_pa,
                        compose(bpa.inj[n], compose(t.lambdas[n].at(m), t.trunc_projs[n].at(m))));
    int mi = m - lo;
    if (mi < 0 || mi >= static_cast<int>(kers.size()))
      acomp.push_back(zero_mor(t.target.obj_at(m), zero_obj(t.target.backend)));
    else
      acomp.push_back(factor_through_mono(kers[mi].map, into_pa));
  }
  out.lambda = make_chain_map(t.target, out.lim, t.target.lo, std::move(acomp));
  return out;
}

LimProdCheck lim_prod_sequence(const Tower& t, const TowerLimit& l) {
  require(t.levels >= 1, ErrKind::PreconditionViolation, "sequence needs at least two levels");
  LimProdCheck out;
  int N = t.levels;
  std::vector<Complex> all(t.es.begin(), t.es.end());
  std::vector<Complex> front(t.es.begin(), t.es.end() - 1);
  out.prod_all = direct_sum(all);
  out.prod_front = N == 0 ? zero_complex(t.target.backend) : direct_sum(front);
  int lo = out.prod_all.lo;
  std::vector<Mor> diff_comps, incl_comps;
  bool right_ok = true, kernel_ok = true;
  for (int m = lo; m <= out.prod_all.hi(); ++m) {
    std::vector<Obj> s_all, s_front;
    for (int n = 0; n <= N; ++n) s_all.push_back(t.es[n].obj_at(m));
    for (int n = 0; n < N; ++n) s_front.push_back(t.es[n].obj_at(m));
    auto bpa = biproduct(s_all);
    auto bpf = biproduct(s_front);
    Mor f = zero_mor(bpa.obj, bpf.obj);
    for (int n = 0; n < N; ++n)
      f = mor_add(f, compose(bpf.inj[n],
                             mor_sub(bpa.proj[n], compose(t.ts[n].at(m), bpa.proj[n + 1]))));
    diff_comps.push_back(f);
    // inclusion of the limit
    Mor km = zero_mor(l.lim.obj_at(m), bpa.obj);
    for (int n = 0; n <= N; ++n)
      km = mor_add(km, compose(bpa.inj[n], l.projs[n].at(m)));
    incl_comps.push_back(km);
    if (kernel(f).obj.dims != l.lim.obj_at(m).dims) kernel_ok = false;
    // explicit right inverse from sections of the transitions
    std::vector<Mor> secs;
    for (int n = 0; n < N; ++n) {
      auto s = splitting_of_epi(t.ts[n].at(m));
      if (!s) {
        right_ok = false;
        break;
      }
      secs.push_back(*s);
    }
    if (!right_ok) break;
    Mor sigma = zero_mor(bpf.obj, bpa.obj);
    for (int n = 1; n <= N; ++n)
      for (int j = 0; j < n; ++j) {
        Mor chain = secs[j];  // s_(n-1) o ... o s_j
        for (int k = j + 1; k < n; ++k) chain = compose(secs[k], chain);
        sigma = mor_add(sigma, compose(bpa.inj[n], mor_neg(compose(chain, bpf.proj[j]))));
      }
    if (N > 0 && compose(f, sigma) != id_mor(bpf.obj)) right_ok = false;
  }
  out.one_minus_t = N == 0 ? zero_chain_map(out.prod_all, out.prod_front)
                           : make_chain_map(out.prod_all, out.prod_front, lo,
                                            std::move(diff_comps));
  out.incl = make_chain_map(l.lim, out.prod_all, lo, std::move(incl_comps));
  out.right_inverse_ok = right_ok && N > 0;
  out.kernel_ok = kernel_ok;
  return out;
}

bool stabilization_check(const Tower& t) {
  const Complex& x = t.target;
  for (int i = x.lo; i <= x.hi(); ++i) {
    Obj hx = cohomology_obj(x, i);
    for (int n = 0; n <= t.levels; ++n) {
      if (i < -n || i > t.window_his[n]) continue;
      if (cohomology_obj(t.es[n], i).dims != hx.dims) return false;
    }
  }
  // vanishing below each cut
  for (int n = 0; n <= t.levels; ++n)
    if (!cohomology_obj(t.es[n], -n - 1).is_zero()) return false;
  return true;
}

}  // namespace resolvent
