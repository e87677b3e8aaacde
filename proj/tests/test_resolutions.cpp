#include "resolvent/resolutions.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace resolvent;
using testutil::random_complex;

namespace {
const Backend kVect{BackendKind::VectFp};
const Backend kNilp2{BackendKind::NilpMod, 2};
const Backend kNilp3{BackendKind::NilpMod, 3};
const Backend kRep{BackendKind::RepA2};

Complex augmented(const Obj& a, const Mor& aug, const Complex& res) {
  std::vector<Obj> objs = {a};
  std::vector<Mor> diffs = {aug};
  for (int n = res.lo; n <= res.hi(); ++n) {
    objs.push_back(res.obj_at(n));
    if (n < res.hi()) diffs.push_back(res.d(n));
  }
  return make_complex(a.backend, -1, std::move(objs), std::move(diffs));
}

bool is_object_resolution(const ObjectResolution& r) {
  if (!is_mono(r.aug)) return false;
  for (int n = r.res.lo; n <= r.res.hi(); ++n)
    if (!is_injective_obj(r.res.obj_at(n))) return false;
  Complex aug = augmented(r.target, r.aug, r.res);
  int top = r.terminated ? aug.hi() : r.depth - 2;
  return is_exact_in(aug, -1, top);
}
}  // namespace

TEST_CASE("object resolutions: frozen small cases") {
  fp::set_modulus(5);
  // vector spaces: everything is injective, resolution terminates immediately
  auto rv = inj_res_object(vect_obj(3), 4);
  CHECK(rv.terminated);
  CHECK(rv.res.hi() == 0);
  CHECK(rv.res.obj_at(0).dims[0] == 3);

  // k over k[x]/(x^2): 0 -> k -> R -> R -> ... never terminates
  auto rk = inj_res_object(nilp_obj(2, Matrix(1, 1)), 5);
  CHECK_FALSE(rk.terminated);
  for (int n = 0; n < 5; ++n) CHECK(iso_type(rk.res.obj_at(n)) == "J2");
  CHECK(is_object_resolution(rk));
  // differential kills exactly the socle at every step
  for (int n = 0; n < 4; ++n) CHECK(rank(rk.res.d(n).comp[0]) == 1);

  // k over k[x]/(x^3): same shape with J3 terms
  auto rk3 = inj_res_object(nilp_obj(3, Matrix(1, 1)), 4);
  CHECK_FALSE(rk3.terminated);
  CHECK(iso_type(rk3.res.obj_at(0)) == "J3");
  CHECK(is_object_resolution(rk3));

  // quiver S1: 0 -> S1 -> S1 -> 0 (already injective)
  auto rs1 = inj_res_object(repa2_obj(1, 0, Matrix(0, 1)), 3);
  CHECK(rs1.terminated);
  CHECK(rs1.res.hi() == 0);
  // quiver S2: 0 -> S2 -> I2 -> S1 -> 0
  auto rs2 = inj_res_object(repa2_obj(0, 1, Matrix(1, 0)), 4);
  CHECK(rs2.terminated);
  CHECK(rs2.res.hi() == 1);
  CHECK(iso_type(rs2.res.obj_at(0)) == "I2");
  CHECK(iso_type(rs2.res.obj_at(1)) == "S1");
  CHECK(is_object_resolution(rs2));
}

TEST_CASE("object resolutions: random objects across backends") {
  fp::set_modulus(5);
  std::mt19937_64 rng(41);
  for (const auto& bk : {kVect, kNilp2, kNilp3, kRep}) {
    for (int trial = 0; trial < 25; ++trial) {
      Obj a = random_obj(bk, rng, 4);
      auto r = inj_res_object(a, 4);
      CHECK(is_object_resolution(r));
      if (bk.kind == BackendKind::RepA2 || bk.kind == BackendKind::VectFp) CHECK(r.terminated);
    }
  }
}

TEST_CASE("bounded-below resolutions of complexes") {
  fp::set_modulus(5);
  std::mt19937_64 rng(43);
  for (const auto& bk : {kVect, kNilp2, kRep}) {
    for (int trial = 0; trial < 15; ++trial) {
      Complex x = random_complex(bk, rng, -2, 1, 3);
      auto pr = inj_res_bounded_below(x, 4);
      for (int n = pr.res.lo; n <= pr.res.hi(); ++n)
        CHECK(is_injective_obj(pr.res.obj_at(n)));
      CHECK(pr.res.lo == x.lo);
      CHECK(is_quasi_iso_in(pr.lambda, x.lo, pr.window_hi));
      if (pr.terminated) CHECK(is_quasi_iso(pr.lambda));
      if (bk.kind != BackendKind::NilpMod) CHECK(pr.terminated);
    }
  }
}

TEST_CASE("bounded-below resolution of a stalk matches the object resolution") {
  fp::set_modulus(5);
  Obj k1 = nilp_obj(2, Matrix(1, 1));
  Complex x = stalk(0, k1);
  auto pr = inj_res_bounded_below(x, 4);
  auto r = inj_res_object(k1, 5);  // same top degree as the complex-level resolution
  auto iso = find_complex_iso(pr.res, r.res, 1);
  REQUIRE(iso.has_value());
  CHECK(is_quasi_iso_in(pr.lambda, 0, pr.window_hi));
}

TEST_CASE("short exact sequence constructor validates") {
  fp::set_modulus(5);
  Obj v1 = vect_obj(1), v2 = vect_obj(2);
  Mor i{v1, v2, {Matrix(2, 1, {1, 0})}};
  Mor p{v2, v1, {Matrix(1, 2, {0, 1})}};
  CHECK_NOTHROW(make_ses(i, p));
  Mor pbad{v2, v1, {Matrix(1, 2, {1, 0})}};
  CHECK_THROWS(make_ses(i, pbad));  // p*i != 0
  Mor ibad = zero_mor(v1, v2);
  CHECK_THROWS(make_ses(ibad, p));  // not mono
}

TEST_CASE("horseshoe fills the middle of a short exact sequence") {
  fp::set_modulus(5);
  std::mt19937_64 rng(47);
  for (const auto& bk : {kVect, kNilp2, kRep}) {
    for (int trial = 0; trial < 12; ++trial) {
      Obj a = random_obj(bk, rng, 3), b = random_obj(bk, rng, 3);
      Mor f = random_mor(rng, a, b);
      auto im = image(f);
      auto q = cokernel(im.mono);
      ShortExact ses = make_ses(im.mono, q.map);
      int depth = 3;
      auto ra = inj_res_object(im.obj, depth);
      auto rc = inj_res_object(q.obj, depth);
      auto hs = horseshoe(ses, ra, rc);
      CHECK(is_object_resolution(hs.middle));
      // augmentation squares against the sequence maps
      CHECK(compose(hs.middle.aug, ses.i) == compose(hs.iota[0], ra.aug));
      CHECK(compose(hs.pi[0], hs.middle.aug) == compose(rc.aug, ses.p));
      // degreewise split exactness and commutation with the differentials
      int L = hs.middle.res.hi();
      for (int n = 0; n <= L; ++n) {
        CHECK(is_mono(hs.iota[n]));
        CHECK(is_epi(hs.pi[n]));
        CHECK(mor_is_zero(compose(hs.pi[n], hs.iota[n])));
        for (int v = 0; v < vertex_count(bk); ++v)
          CHECK(hs.middle.res.obj_at(n).dims[v] ==
                ra.res.obj_at(n).dims[v] + rc.res.obj_at(n).dims[v]);
        if (n < L) {
          CHECK(compose(hs.middle.res.d(n), hs.iota[n]) == compose(hs.iota[n + 1], ra.res.d(n)));
          CHECK(compose(hs.pi[n + 1], hs.middle.res.d(n)) == compose(rc.res.d(n), hs.pi[n]));
        }
      }
    }
  }
}

TEST_CASE("Cartan-Eilenberg grids validate all column conditions") {
  fp::set_modulus(5);
  std::mt19937_64 rng(53);
  for (const auto& bk : {kVect, kNilp2, kRep}) {
    for (int trial = 0; trial < 6; ++trial) {
      Complex x = random_complex(bk, rng, -1, 1, 3);
      auto ce = ce_resolution(x, 3);
      auto v = validate_ce(ce);
      CHECK(v.columns_windowed);
      CHECK(v.b_columns_resolve);
      CHECK(v.z_columns_resolve);
      CHECK(v.h_columns_resolve);
      CHECK(v.full_columns_resolve);
      CHECK(v.all());
      // augmentation compatibility with the horizontal differential
      for (int n = x.lo; n < x.hi(); ++n)
        CHECK(compose(ce.grid.d0_at(0, n), ce.lambda[n - x.lo]) ==
              compose(ce.lambda[n + 1 - x.lo], x.d(n)));
    }
  }
}

TEST_CASE("totalized Cartan-Eilenberg resolution is a quasi-isomorphism in the window") {
  fp::set_modulus(5);
  std::mt19937_64 rng(59);
  for (const auto& bk : {kVect, kNilp2, kRep}) {
    for (int trial = 0; trial < 6; ++trial) {
      Complex x = random_complex(bk, rng, 0, 2, 3);
      auto ce = ce_resolution(x, 3);
      auto tot = ce_tot(ce);
      CHECK(is_quasi_iso_in(tot.lambda, x.lo, tot.window_hi));
      for (int n = tot.tot.cx.lo; n <= tot.tot.cx.hi(); ++n)
        CHECK(is_injective_obj(tot.tot.cx.obj_at(n)));
    }
  }
}

TEST_CASE("killing coboundaries removes exactly one cohomology group") {
  fp::set_modulus(5);
  std::mt19937_64 rng(61);
  for (const auto& bk : {kVect, kNilp2, kRep}) {
    for (int trial = 0; trial < 15; ++trial) {
      Complex x = random_complex(bk, rng, -1, 2, 3);
      for (int n = -2; n <= 3; ++n) {
        auto kr = kill_coboundaries(x, n);
        CHECK(cohomology_obj(kr.k, n).is_zero());
        // projection is a degreewise split epi chain map with stalk kernel
        for (int m = kr.k.lo; m <= kr.k.hi(); ++m) {
          CHECK(is_split_epi(kr.pi.at(m)));
          auto ker = kernel(kr.pi.at(m));
          if (m == n + 1)
            CHECK(ker.obj.dims == kr.added.dims);
          else
            CHECK(ker.obj.is_zero());
        }
        // cohomology away from n and n+1 is untouched
        for (int m = x.lo - 1; m <= x.hi() + 1; ++m) {
          if (m == n || m == n + 1) continue;
          CHECK(cohomology_obj(kr.k, m).dims == cohomology_obj(x, m).dims);
        }
      }
    }
  }
}

TEST_CASE("kill uses the quotient itself when it is already injective") {
  fp::set_modulus(5);
  // over vect the quotient is injective, so nothing new is appended beyond it
  auto kr = kill_coboundaries(stalk(0, vect_obj(2)), 0);
  CHECK(kr.envelope_was_identity);
  CHECK(kr.added.dims[0] == 2);
  // over k[x]/(x^2) the quotient k is not injective and a regular block appears
  auto kr2 = kill_coboundaries(stalk(0, nilp_obj(2, Matrix(1, 1))), 0);
  CHECK_FALSE(kr2.envelope_was_identity);
  CHECK(iso_type(kr2.added) == "J2");
}

TEST_CASE("index schedule walks widening windows") {
  CHECK(ding_yang_index(0) == 0);
  CHECK(ding_yang_index(1) == -1);
  CHECK(ding_yang_index(2) == 0);
  CHECK(ding_yang_index(3) == 1);
  CHECK(ding_yang_index(4) == -2);
  CHECK(ding_yang_index(6) == 0);
  CHECK(ding_yang_index(8) == 2);
  CHECK(ding_yang_index(9) == -3);
  CHECK(ding_yang_index(15) == 3);
  CHECK(ding_yang_index(16) == -4);
}

TEST_CASE("iterated kill over k[x]/(x^2): first steps match the worked values") {
  fp::set_modulus(5);
  Obj k1 = nilp_obj(2, Matrix(1, 1));
  Obj r = nilp_regular(2);
  Complex x = stalk(0, k1);
  auto dy = ding_yang_iterate(x, 3);
  // Y0: degrees [0,1], k -> R embedded via the socle
  Complex y0_expected;
  {
    Mor env = injective_envelope(k1);
    y0_expected = make_complex(kNilp2, 0, {k1, r}, {env});
  }
  auto i0 = find_complex_iso(trim(dy.ys[1]), y0_expected, 1);
  CHECK(i0.has_value());
  // Y1 = Y0 (the index -1 step kills nothing here)
  auto i1 = find_complex_iso(trim(dy.ys[2]), y0_expected, 2);
  CHECK(i1.has_value());
  // Y2 = Y0 plus a stalk R in degree 1
  Complex y2_expected = direct_sum({y0_expected, stalk(1, r)});
  auto i2 = find_complex_iso(trim(dy.ys[3]), y2_expected, 3);
  CHECK(i2.has_value());
}

TEST_CASE("hom cochain complexes and ext groups") {
  fp::set_modulus(5);
  // vector spaces: ext vanishes above degree zero
  CHECK(ext_group(vect_obj(2), vect_obj(3), 0).dims[0] == 6);
  CHECK(ext_group(vect_obj(2), vect_obj(3), 1).is_zero());
  CHECK(ext_group(vect_obj(2), vect_obj(3), 2).is_zero());

  // k[x]/(x^2): Ext^k(k, k) is one-dimensional in every degree
  Obj k1 = nilp_obj(2, Matrix(1, 1));
  for (int k = 0; k <= 3; ++k) CHECK(ext_group(k1, k1, k).dims[0] == 1);

  // quiver: the nonsplit extension 0 -> S2 -> I2 -> S1 -> 0 is the only one
  Obj s1 = repa2_obj(1, 0, Matrix(0, 1));
  Obj s2 = repa2_obj(0, 1, Matrix(1, 0));
  CHECK(ext_group(s1, s2, 0).is_zero());
  CHECK(ext_group(s1, s2, 1).dims[0] == 1);
  CHECK(ext_group(s2, s1, 1).is_zero());
  CHECK(ext_group(s1, s1, 0).dims[0] == 1);
  CHECK(ext_group(s1, s1, 1).is_zero());

  // contravariant hom of a disk is exact; of a stalk it is a shifted hom space
  Complex dsk = disk(0, k1);
  auto hd = hom_cochain_contravariant(dsk, nilp_regular(2));
  CHECK(is_exact(hd.cx));
  auto hs = hom_cochain_contravariant(stalk(2, k1), nilp_regular(2));
  CHECK(hs.cx.lo == -2);
  CHECK(hs.cx.obj_at(-2).dims[0] == hom_dim(k1, nilp_regular(2)));
}
