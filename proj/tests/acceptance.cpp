// Acceptance gate: every release-blocking property, one verdict line each.
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "resolvent/io.hpp"
#include "resolvent/relclasses.hpp"
#include "resolvent/towers.hpp"
#include "test_util.hpp"

using namespace resolvent;

namespace {

const Backend kVect{BackendKind::VectFp, 1};
const Backend kNilp2{BackendKind::NilpMod, 2};
const Backend kRep{BackendKind::RepA2, 1};

Obj rep_s1() { return repa2_obj(1, 0, Matrix(0, 1)); }
Obj rep_s2() { return repa2_obj(0, 1, Matrix(1, 0)); }

// -------------------------------------------------------------- criterion 1
// The thirteen-stage worked list for the iterated coboundary killing of a
// simple stalk over k[x]/(x^2): every stage matches its closed form via an
// explicitly found chain isomorphism.
bool criterion_worked_list() {
  fp::set_modulus(5);
  Obj k = nilp_obj(2, Matrix(1, 1));
  Obj R = nilp_regular(2);
  Obj R2 = biproduct({R, R}).obj;

  auto resolution_segment = [&](int m) {  // k -> E^1 -> ... -> E^m in degrees 0..m
    auto r = inj_res_object(k, m);
    std::vector<Obj> objs{k};
    std::vector<Mor> diffs{r.aug};
    for (int i = 0; i < m; ++i) objs.push_back(r.res.objs[i]);
    for (int i = 0; i + 1 < m; ++i) diffs.push_back(r.res.diffs[i]);
    return make_complex(kNilp2, 0, std::move(objs), std::move(diffs));
  };

  auto dy = ding_yang_iterate(stalk(0, k), 13);
  Complex y3 = direct_sum({resolution_segment(2), disk(1, R)});
  Complex y8 = direct_sum({resolution_segment(3), disk(1, R2), disk(2, R2)});
  std::vector<Complex> expected = {
      resolution_segment(1),
      resolution_segment(1),
      direct_sum({resolution_segment(1), stalk(1, R)}),
      y3,
      y3,
      y3,
      direct_sum({resolution_segment(2), stalk(1, R), disk(1, R)}),
      direct_sum({resolution_segment(2), disk(1, R2), stalk(2, R2)}),
      y8,
      y8,
      y8,
      y8,
      direct_sum({resolution_segment(3), stalk(1, R), disk(1, R2), disk(2, R2)}),
  };
  for (int i = 0; i <= 12; ++i) {
    auto iso = find_complex_iso(trim(dy.ys[i + 1]), trim(expected[i]), 1000 + i);
    if (!iso || !is_degreewise_iso(*iso)) return false;
  }
  return true;
}

// -------------------------------------------------------------- criterion 2
// Coboundary killing postconditions on 500 seeded complexes over all backends.
bool criterion_kill() {
  fp::set_modulus(5);
  std::vector<Backend> backends = {kVect, kNilp2, kRep};
  int done = 0;
  for (uint64_t seed = 0; done < 500; ++seed) {
    const Backend& b = backends[seed % backends.size()];
    std::mt19937_64 rng(9000 + seed);
    Complex x = testutil::random_complex(b, rng, -2, 2, 3);
    int n = (int)(seed % 5) - 2;
    auto kr = kill_coboundaries(x, n);
    if (!cohomology_obj(kr.k, n).is_zero()) return false;
    for (int m = kr.k.lo; m <= kr.k.hi(); ++m) {
      if (!is_split_epi(kr.pi.at(m))) return false;
      Obj ker = kernel(kr.pi.at(m)).obj;
      if (m == n + 1 ? iso_type(ker) != iso_type(kr.added) : !ker.is_zero()) return false;
    }
    for (int m = x.lo - 1; m <= x.hi() + 2; ++m) {
      if (m == n || m == n + 1) continue;
      if (iso_type(cohomology_obj(kr.k, m)) != iso_type(cohomology_obj(x, m))) return false;
    }
    ++done;
  }
  return true;
}

// -------------------------------------------------------------- criterion 3
// Resolution of bounded-below complexes: 300 seeded runs, certified window,
// full exactness of the cone over the finite-injective-dimension backend.
bool criterion_resolve() {
  fp::set_modulus(5);
  std::vector<Backend> backends = {kVect, kNilp2, kRep};
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const Backend& b = backends[seed % backends.size()];
    std::mt19937_64 rng(11000 + seed);
    Complex x = testutil::random_complex(b, rng, -2, 1, 3);
    auto r = inj_res_bounded_below(x, 3);
    for (auto& t : r.res.objs)
      if (!is_injective_obj(t)) return false;
    for (int n = x.lo; n <= x.hi(); ++n)
      if (!is_mono(r.lambda.at(n))) return false;
    if (!is_quasi_iso_in(r.lambda, x.lo - 1, r.window_hi)) return false;
    if (b.kind == BackendKind::RepA2) {
      if (!r.terminated) return false;
      if (!is_exact(cone(r.lambda).cx)) return false;
    }
  }
  return true;
}

// -------------------------------------------------------------- criterion 4
// Finite towers: split-exact shifted-difference sequence with an explicit
// right inverse, and the limit equal to the degreewise kernels.
bool criterion_towers() {
  fp::set_modulus(5);
  std::vector<Backend> backends = {kVect, kNilp2, kRep};
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const Backend& b = backends[seed % backends.size()];
    std::mt19937_64 rng(13000 + seed);
    Complex x = testutil::random_complex(b, rng, -1, 1, 2);
    int levels = 1 + (int)(seed % 5);
    auto tw = build_tower(x, levels, 2);
    auto lim = finite_limit(tw);
    auto lp = lim_prod_sequence(tw, lim);
    if (!lp.right_inverse_ok || !lp.kernel_ok) return false;
    if (!chain_map_is_zero(compose(lp.one_minus_t, lp.incl))) return false;
    for (int m = lp.prod_all.lo; m <= lp.prod_all.hi(); ++m)
      if (!is_epi(lp.one_minus_t.at(m))) return false;
    for (int m = lim.lim.lo; m <= lim.lim.hi(); ++m)
      if (!is_mono(lp.incl.at(m))) return false;
    if (!is_degreewise_iso(lim.projs[levels])) return false;
  }
  return true;
}

// -------------------------------------------------------------- criterion 5
// Grid resolution plus totalization at depth 3, 100 runs per backend.
bool criterion_ce_tot() {
  fp::set_modulus(5);
  for (const Backend& b : {kVect, kNilp2, kRep})
    for (uint64_t seed = 0; seed < 100; ++seed) {
      std::mt19937_64 rng(15000 + seed);
      Complex x = testutil::random_complex(b, rng, -1, 1, 2);
      auto ce = ce_resolution(x, 3);
      if (!validate_ce(ce).all()) return false;
      auto t = ce_tot(ce);
      if (!is_quasi_iso_in(t.lambda, x.lo - 1, t.window_hi)) return false;
    }
  return true;
}

// -------------------------------------------------------------- criterion 6
// Comparison of independently built relative resolutions: mutually inverse
// lifts with two-sided homotopies, and uniqueness of extensions up to a
// homotopy inside the certified window.
bool criterion_comparisons() {
  fp::set_modulus(5);
  struct Case {
    InjClass cls;
    Backend b;
  };
  std::vector<Case> cases = {{full_injectives(kRep), kRep},
                             {full_injectives(kNilp2), kNilp2},
                             {torsion_injectives(), kRep}};
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const Case& c = cases[seed % cases.size()];
    std::mt19937_64 rng(17000 + seed);
    Obj a = random_obj(c.b, rng, 3);
    auto r1 = rel_inj_res(c.cls, a, 4);
    auto r2 = pad_rel_resolution(rel_inj_res(c.cls, a, 4), rng);
    auto cmp = homotopy_equiv_resolutions(r1, r2);
    if (!(compose(cmp.fwd.at(0), r1.aug) == r2.aug)) return false;
    if (!(compose(cmp.bwd.at(0), r2.aug) == r1.aug)) return false;
    ChainMap rt = compose(cmp.bwd, cmp.fwd);
    ChainMap idm = id_chain_map(r1.res);
    for (int n = r1.res.lo; n <= cmp.window_hi; ++n) {
      Mor lhs = mor_sub(rt.at(n), idm.at(n));
      Mor rhs = mor_add(compose(r1.res.d(n - 1), cmp.h_fwd.at(n, r1.res, r1.res)),
                        compose(cmp.h_fwd.at(n + 1, r1.res, r1.res), r1.res.d(n)));
      if (!(lhs == rhs)) return false;
    }
    // a second, independently solved extension of the identity differs from
    // the first by a homotopy in the window
    ChainMap other = extend_chain_map(id_mor(a), r1, r2);
    if (!find_homotopy_in(cmp.fwd, other, r1.res.lo, cmp.window_hi)) return false;
  }
  return true;
}

// -------------------------------------------------------------- criterion 7
// The torsion-class dictionary over the quiver backend: relative monos and
// relative weak equivalences match the verdicts after applying the exact
// quotient functor, and the sample contains relative weak equivalences that
// are not quasi-isomorphisms.
bool criterion_dictionary() {
  fp::set_modulus(5);
  InjClass c = torsion_injectives();
  int strict = 0;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(19000 + seed);
    ChainMap f = [&] {
      if (seed % 2 == 0) {
        // projection off a torsion stalk summand: relative weak equivalence
        // by construction, never a quasi-isomorphism
        Complex x = testutil::random_complex(kRep, rng, -1, 1, 2);
        int m = (int)(seed % 3) - 1;
        Complex s = stalk(m, rep_s2());
        Complex sum = direct_sum({x, s});
        std::vector<Mor> comps;
        for (int n = sum.lo; n <= sum.hi(); ++n)
          comps.push_back(biproduct({x.obj_at(n), s.obj_at(n)}).proj[0]);
        return make_chain_map(sum, x, sum.lo, std::move(comps));
      }
      // random nullhomotopic map between random complexes
      Complex x = testutil::random_complex(kRep, rng, -1, 1, 2);
      Complex y = testutil::random_complex(kRep, rng, -1, 1, 2);
      std::vector<Mor> h;
      for (int n = x.lo; n <= x.hi() + 1; ++n)
        h.push_back(random_mor(rng, x.obj_at(n), y.obj_at(n - 1)));
      std::vector<Mor> comps;
      for (int n = x.lo; n <= x.hi(); ++n)
        comps.push_back(mor_add(compose(y.d(n - 1), h[n - x.lo]),
                                compose(h[n + 1 - x.lo], x.d(n))));
      return make_chain_map(x, y, x.lo, std::move(comps));
    }();
    bool iwe = is_I_we(c, f);
    if (iwe != is_quasi_iso(torsion_Q(f))) return false;
    for (int n = f.src.lo; n <= f.src.hi(); ++n)
      if (is_I_mono(c, f.at(n)) != is_mono(torsion_Q(f.at(n)))) return false;
    if (iwe && !is_quasi_iso(f)) ++strict;
  }
  return strict >= 20;
}

// -------------------------------------------------------------- criterion 8
// Product exactness verdicts computed along two independent routes agree on
// 100 seeded families per class.
bool criterion_ab4() {
  fp::set_modulus(5);
  struct Case {
    InjClass cls;
    Backend b;
  };
  std::vector<Case> cases = {{full_injectives(kVect), kVect},
                             {full_injectives(kNilp2), kNilp2},
                             {full_injectives(kRep), kRep},
                             {torsion_injectives(), kRep}};
  for (const Case& c : cases)
    for (uint64_t seed = 0; seed < 100; ++seed) {
      std::mt19937_64 rng(21000 + seed);
      int depth = 3 + (int)(seed % 2);
      std::vector<Complex> fam;
      for (int j = 0; j < 2 + (int)(seed % 2); ++j)
        fam.push_back(rel_inj_res(c.cls, random_obj(c.b, rng, 2), depth).res);
      if (!ab4_I_k_check(c.cls, fam, 0, depth).agree) return false;
    }
  return true;
}

// -------------------------------------------------------------- criterion 9
// The transfinite continuations are documented, not simulated: the shipped
// notes must map each finite construction to the infinite product its
// continuation would need.
bool criterion_documented() {
  std::ifstream in(RESOLVENT_DOC_PATH);
  if (!in) return false;
  std::ostringstream os;
  os << in.rdbuf();
  std::string doc = os.str();
  for (const char* needle :
       {"resolution towers", "totalization", "reassembly", "killing", "(Ab.4*)", "infinite product"})
    if (doc.find(needle) == std::string::npos) return false;
  return doc.size() > 1000;
}

// ------------------------------------------------------------- criterion 10
// Ext spot values over the quiver backend, cross-checked by exhaustively
// searching every short exact sequence with the prescribed ends for a
// non-split one.
bool criterion_ext() {
  fp::set_modulus(5);
  Obj s1 = rep_s1(), s2 = rep_s2();
  int d12 = ext_group(s1, s2, 1).dim(0);
  int d21 = ext_group(s2, s1, 1).dim(0);
  if (d12 != 1 || d21 != 0) return false;

  auto nonsplit_exists = [](const Obj& sub, const Obj& quot) {
    bool found = false;
    for (int fval = 0; fval < (int)fp::modulus(); ++fval) {
      Obj mid = repa2_obj(1, 1, Matrix(1, 1, {fval}));
      auto bi = hom_basis(sub, mid);
      auto bq = hom_basis(mid, quot);
      auto each = [](size_t dim, auto&& fn) {
        std::vector<int> co(dim, 0);
        for (;;) {
          fn(co);
          size_t k = 0;
          while (k < dim && ++co[k] == (int)fp::modulus()) co[k++] = 0;
          if (k == dim) break;
        }
      };
      each(bi.size(), [&](const std::vector<int>& ci) {
        Matrix mi((int)ci.size(), 1);
        for (size_t j = 0; j < ci.size(); ++j) mi.set((int)j, 0, ci[j]);
        Mor i = mor_from_coords(sub, mid, bi, mi);
        if (!is_mono(i)) return;
        each(bq.size(), [&](const std::vector<int>& cq) {
          Matrix mq((int)cq.size(), 1);
          for (size_t j = 0; j < cq.size(); ++j) mq.set((int)j, 0, cq[j]);
          Mor q = mor_from_coords(mid, quot, bq, mq);
          if (!is_epi(q) || !mor_is_zero(compose(q, i))) return;
          try {
            make_ses(i, q);
          } catch (const Error&) {
            return;
          }
          if (!is_split_epi(q)) found = true;
        });
      });
    }
    return found;
  };
  // dimension 1 means a non-split extension exists; dimension 0 means every
  // candidate sequence splits
  return nonsplit_exists(s2, s1) && !nonsplit_exists(s1, s2);
}

struct Criterion {
  const char* what;
  bool (*run)();
};

}  // namespace

int main() {
  std::vector<Criterion> cs = {
      {"worked list of thirteen iterated killing stages matches closed forms", criterion_worked_list},
      {"coboundary killing postconditions on 500 seeded complexes", criterion_kill},
      {"bounded-below resolutions certified on 300 seeded complexes", criterion_resolve},
      {"finite towers: split-exact limit sequence with explicit right inverse", criterion_towers},
      {"grid resolution and totalization certified at depth 3", criterion_ce_tot},
      {"relative resolution comparisons with two-sided homotopies", criterion_comparisons},
      {"torsion dictionary with strictly-relative weak equivalences", criterion_dictionary},
      {"product exactness verdicts agree along independent routes", criterion_ab4},
      {"transfinite limitations documented construction by construction", criterion_documented},
      {"Ext spot values cross-checked by exhaustive split search", criterion_ext},
  };
  bool all = true;
  for (size_t i = 0; i < cs.size(); ++i) {
    bool ok = false;
    try {
      ok = cs[i].run();
    } catch (const std::exception& e) {
      std::cout << "criterion " << (i + 1) << " threw: " << e.what() << "\n";
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": " << cs[i].what << "\n";
    all = all && ok;
  }
  return all ? 0 : 1;
}
