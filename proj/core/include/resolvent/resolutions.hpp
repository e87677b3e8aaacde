#pragma once
#include <vector>

#include "resolvent/bicomplexes.hpp"
#include "resolvent/complexes.hpp"

namespace resolvent {

/* Injective resolution of a single object, built by iterated minimal
   envelopes: 0 -> a -> E^0 -> ... -> E^(depth-1). */
struct ObjectResolution {
  Obj target;
  Complex res;  // degrees 0..len-1
  Mor aug;      // target -> res^0, mono
  int depth = 0;
  bool terminated = false;  // cokernel hit zero before the depth cut
};
ObjectResolution inj_res_object(const Obj& a, int depth);

/* Degreewise-injective resolution of a bounded-below complex via the inductive
   push-out construction; lambda is a degreewise mono and H^i(lambda) is an iso
   for i <= window_hi (everything when `terminated`). */
struct PartialResolution {
  Complex target;
  Complex res;
  ChainMap lambda;
  int window_hi = 0;
  bool terminated = false;
};
PartialResolution inj_res_bounded_below(const Complex& x, int depth);

struct ShortExact {
  Mor i, p;  // 0 -> A -i-> B -p-> C -> 0
};
ShortExact make_ses(const Mor& i, const Mor& p);  // validates exactness

/* Simultaneous resolution of the middle term of a short exact sequence from
   resolutions of the ends; the returned inclusions/projections are the strict
   degreewise biproduct maps E_A^m -> E_B^m -> E_C^m. */
struct HorseshoeResult {
  ObjectResolution middle;
  std::vector<Mor> iota;  // E_A^m -> E_B^m
  std::vector<Mor> pi;    // E_B^m -> E_C^m
};
HorseshoeResult horseshoe(const ShortExact& ses, const ObjectResolution& ra,
                          const ObjectResolution& rc);

/* Cartan-Eilenberg-style resolution of a bounded complex: columns are
   resolutions of the degreewise terms assembled through two horseshoe steps,
   vertical differentials carry the columnwise sign. */
struct CEResolution {
  Complex target;
  Bicomplex grid;           // anticommuting
  std::vector<Mor> lambda;  // target^n -> C^(0,n), index n - target.lo
  int depth = 0;
  // construction pieces kept for validation
  std::vector<ObjectResolution> resB;  // B^n for n = lo..hi+1
  std::vector<ObjectResolution> resH;  // H^n for n = lo..hi
  std::vector<HorseshoeResult> hsZ;    // resolutions of Z^n
  std::vector<HorseshoeResult> hsA;    // resolutions of A^n
};
CEResolution ce_resolution(const Complex& a, int depth);

struct CEValidation {
  bool columns_windowed = false;     // columns vanish outside the target support
  bool b_columns_resolve = false;    // horizontal coboundaries resolve B^n(target)
  bool z_columns_resolve = false;    // horizontal cocycles resolve Z^n(target)
  bool h_columns_resolve = false;    // horizontal cohomology resolves H^n(target)
  bool full_columns_resolve = false; // columns resolve the degreewise terms
  bool all() const {
    return columns_windowed && b_columns_resolve && z_columns_resolve && h_columns_resolve &&
           full_columns_resolve;
  }
};
CEValidation validate_ce(const CEResolution& ce);

/* Totalization of the CE grid together with the comparison map from the target. */
struct CETotResult {
  Totalization tot;
  ChainMap lambda;  // target -> Tot
  int window_hi = 0;
};
CETotResult ce_tot(const CEResolution& ce);

/* Enlarge degree n+1 by an injective hull of X^n / coboundaries so that H^n of
   the result vanishes. pi is the degreewise split epi back onto x with kernel
   the stalk of the added summand in degree n+1. */
struct KillResult {
  Complex k;
  ChainMap pi;  // k -> x
  Obj added;    // the appended injective (zero when the quotient was injective)
  bool envelope_was_identity = false;
};
KillResult kill_coboundaries(const Complex& x, int n);

/* Degree schedule of the iterated construction: 0; -1,0,1; -2,...,2; ... */
int ding_yang_index(int i);

struct DingYangResult {
  std::vector<Complex> ys;  // ys[0] = x, ys[i+1] = kill(ys[i], n_i)
  std::vector<int> ns;
};
DingYangResult ding_yang_iterate(const Complex& x, int steps);

/* Hom into/out of a fixed object, as complexes of F_p vector spaces.
   Covariant: degree n is Hom(a, y^n). Contravariant: degree n is
   Hom(x^(-n), a), differentials by pre-composition. */
struct HomCochain {
  Complex cx;                          // VectFp backend
  std::vector<std::vector<Mor>> bases; // index n - cx.lo: chosen basis of the hom space
};
HomCochain hom_cochain_covariant(const Obj& a, const Complex& y);
HomCochain hom_cochain_contravariant(const Complex& x, const Obj& a);

/* Ext^k(a, b) computed from an injective coresolution of b; returned as the
   underlying F_p vector space. */
Obj ext_group(const Obj& a, const Obj& b, int k);

}  // namespace resolvent
