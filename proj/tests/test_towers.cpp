#include "resolvent/towers.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace resolvent;
using testutil::random_complex;

namespace {
const Backend kVect{BackendKind::VectFp};
const Backend kNilp2{BackendKind::NilpMod, 2};
const Backend kRep{BackendKind::RepA2};
}  // namespace

TEST_CASE("towers: transitions are compatible split epis with injective kernels") {
  fp::set_modulus(5);
  std::mt19937_64 rng(67);
  for (const auto& bk : {kVect, kNilp2, kRep}) {
    for (int trial = 0; trial < 4; ++trial) {
      Complex x = random_complex(bk, rng, -2, 0, 2);
      Tower tw = build_tower(x, 2, 2);
      for (int n = 0; n < tw.levels; ++n) {
        const ChainMap& t = tw.ts[n];
        // exact compatibility with the augmentations of both levels
        ChainMap lhs = compose(t, tw.lambdas[n + 1]);
        ChainMap rhs = compose(tw.lambdas[n], tw.rhos[n]);
        CHECK(chain_map_is_zero(chain_map_sub(lhs, rhs)));
        for (int m = tw.es[n].lo; m <= tw.es[n].hi(); ++m) {
          CHECK(is_split_epi(t.at(m)));
          CHECK(is_injective_obj(kernel(t.at(m)).obj));
        }
      }
      for (int n = 0; n <= tw.levels; ++n) {
        for (int m = tw.es[n].lo; m <= tw.es[n].hi(); ++m)
          CHECK(is_injective_obj(tw.es[n].obj_at(m)));
        CHECK(is_quasi_iso_in(tw.lambdas[n], tw.truncations[n].lo, tw.window_his[n]));
      }
    }
  }
}

TEST_CASE("towers: the finite limit is the deepest level") {
  fp::set_modulus(5);
  std::mt19937_64 rng(71);
  for (const auto& bk : {kVect, kNilp2, kRep}) {
    for (int trial = 0; trial < 3; ++trial) {
      Complex x = random_complex(bk, rng, -1, 1, 2);
      Tower tw = build_tower(x, 2, 2);
      TowerLimit l = finite_limit(tw);
      // projection to the last level is an isomorphism of complexes
      CHECK(is_degreewise_iso(l.projs[tw.levels]));
      // projections commute with the transitions
      for (int n = 0; n < tw.levels; ++n) {
        ChainMap a = compose(tw.ts[n], l.projs[n + 1]);
        CHECK(chain_map_is_zero(chain_map_sub(a, l.projs[n])));
      }
      // the induced augmentation restricts to the level augmentations
      for (int n = 0; n <= tw.levels; ++n) {
        ChainMap a = compose(l.projs[n], l.lambda);
        ChainMap b = compose(tw.lambdas[n], tw.trunc_projs[n]);
        CHECK(chain_map_is_zero(chain_map_sub(a, b)));
      }
      // deep enough levels make the limit a resolution of the whole complex
      CHECK(is_quasi_iso_in(l.lambda, x.lo, tw.window_his[tw.levels]));
    }
  }
}

TEST_CASE("towers: limit-product sequence with explicit right inverse") {
  fp::set_modulus(5);
  std::mt19937_64 rng(73);
  for (const auto& bk : {kVect, kNilp2, kRep}) {
    Complex x = random_complex(bk, rng, -1, 1, 2);
    Tower tw = build_tower(x, 2, 2);
    TowerLimit l = finite_limit(tw);
    LimProdCheck seq = lim_prod_sequence(tw, l);
    CHECK(seq.right_inverse_ok);
    CHECK(seq.kernel_ok);
    CHECK(chain_map_is_zero(compose(seq.one_minus_t, seq.incl)));
    for (int m = seq.prod_all.lo; m <= seq.prod_all.hi(); ++m) {
      CHECK(is_mono(seq.incl.at(m)));
      CHECK(is_epi(seq.one_minus_t.at(m)));
    }
  }
}

TEST_CASE("towers: levelwise cohomology stabilizes") {
  fp::set_modulus(5);
  std::mt19937_64 rng(79);
  for (const auto& bk : {kVect, kNilp2, kRep}) {
    Complex x = random_complex(bk, rng, -2, 1, 2);
    Tower tw = build_tower(x, 3, 2);
    CHECK(stabilization_check(tw));
  }
}
