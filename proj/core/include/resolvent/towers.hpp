#pragma once
#include "resolvent/resolutions.hpp"

namespace resolvent {

/* Inverse system of injective resolutions over the left truncations of a
   complex: level n resolves the part of x in degrees >= -n, and the
   transition maps t_n: E_(n+1) -> E_n are degreewise split epi chain maps
   compatible with the truncation projections. Deeper levels are resolved one
   degree further so the transition lifts always exist. */
struct Tower {
  Complex target;
  int levels = 0;  // levels 0..levels
  int depth = 0;
  std::vector<Complex> truncations;   // degreewise >= -n part of target
  std::vector<ChainMap> trunc_projs;  // target -> truncations[n]
  std::vector<ChainMap> rhos;         // truncations[n+1] -> truncations[n]
  std::vector<Complex> es;            // E_n, degreewise injective
  std::vector<ChainMap> lambdas;      // truncations[n] -> E_n, quasi-iso in window
  std::vector<ChainMap> ts;           // t_n: E_(n+1) -> E_n
  std::vector<int> window_his;        // certified window per level
};
Tower build_tower(const Complex& x, int levels, int depth);

/* Limit of the finite tower: the degreewise kernel of
   (1-t): E_0 x ... x E_N -> E_0 x ... x E_(N-1). */
struct TowerLimit {
  Complex lim;
  std::vector<ChainMap> projs;  // lim -> E_n, compatible with the transitions
  ChainMap lambda;              // target -> lim induced by the level augmentations
};
TowerLimit finite_limit(const Tower& t);

/* The sequence 0 -> lim -> prod E_n -> prod E_(n-1) -> 0 with the shifted
   difference map, plus an explicitly verified degreewise right inverse built
   from sections of the transition maps. */
struct LimProdCheck {
  Complex prod_all, prod_front;
  ChainMap one_minus_t;  // prod_all -> prod_front
  ChainMap incl;         // lim -> prod_all
  bool right_inverse_ok = false;  // (1-t) o sigma = id degreewise
  bool kernel_ok = false;         // degreewise kernel of (1-t) matches the limit
};
LimProdCheck lim_prod_sequence(const Tower& t, const TowerLimit& l);

/* Levelwise cohomology stabilizes to the cohomology of the target inside the
   certified windows, and vanishes below each truncation cut. */
bool stabilization_check(const Tower& t);

}  // namespace resolvent
