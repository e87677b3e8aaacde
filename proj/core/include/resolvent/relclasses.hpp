#pragma once
#include <random>

#include "resolvent/resolutions.hpp"

namespace resolvent {

/* A preenveloping class of injectives-relative-to-a-functor, described by a
   finite set of generators G: the class is everything the generators detect.
   - FullInjectives: all injective objects; G is a cogenerating set.
   - ProdOf: finite products of a fixed list of objects.
   - TorsionInjectives (quiver backend only): representations supported at the
     first vertex; the associated exact quotient functor is evaluation there. */
enum class InjClassKind { FullInjectives, ProdOf, TorsionInjectives };

struct InjClass {
  InjClassKind kind = InjClassKind::FullInjectives;
  Backend backend;
  std::vector<Obj> generators;
};

InjClass full_injectives(const Backend& b);
InjClass prod_of(const Backend& b, std::vector<Obj> es);
InjClass torsion_injectives();

bool in_class(const InjClass& c, const Obj& a);
Mor preenvelope(const InjClass& c, const Obj& a);  // target lies in the class

/* f is a relative mono: precomposition Hom(cod f, I) -> Hom(dom f, I) is
   surjective for every generator I. */
bool is_I_mono(const InjClass& c, const Mor& f);

struct RelResolution {
  InjClass cls;
  Obj target;
  Complex res;  // degrees 0..len, terms in the class
  Mor aug;      // target -> res^0, a relative mono
  int depth = 0;
  bool terminated = false;
};
RelResolution rel_inj_res(const InjClass& c, const Obj& a, int depth);

/* Random variation: direct-sum exact disks of products of generators into a
   resolution; the result resolves the same object in the same class. */
RelResolution pad_rel_resolution(const RelResolution& r, std::mt19937_64& rng);

/* Lift g: a -> b to a chain map between relative resolutions, degree by
   degree; throws NoLift when some stage has no solution. */
ChainMap extend_chain_map(const Mor& g, const RelResolution& ra, const RelResolution& rb);

/* Comparison of two resolutions of the same object: mutually inverse lifts of
   the identity together with homotopies, all certified inside the window
   where both resolutions are long enough. */
struct RelComparison {
  ChainMap fwd, bwd;
  Homotopy h_fwd;  // d h + h d = bwd o fwd - id up to window_hi
  Homotopy h_bwd;
  int window_hi = 0;
};
RelComparison homotopy_equiv_resolutions(const RelResolution& r1, const RelResolution& r2);

/* Weak equivalences and acyclicity through the contravariant hom complexes
   over the generators. */
bool is_I_we(const InjClass& c, const ChainMap& f);
bool is_I_acyclic(const InjClass& c, const Complex& x);

/* Certificate check: degreewise split epi with a degreewise kernel lying in
   the class. Absence of the certificate yields Unknown, not a refutation. */
enum class FibrationStatus { Certified, Unknown };
FibrationStatus is_I_fibration(const InjClass& c, const ChainMap& f);

/* Exactness conditions on a finite product of class resolutions in one
   degree, computed along two independent routes: vanishing relative
   cohomology of the hom complexes, and relative monicity of the induced map
   out of the cokernel. The two verdicts must agree. */
struct Ab4Report {
  int n_lo = 0, n_hi = -1;
  std::vector<bool> via_hom;
  std::vector<bool> via_mono;
  bool agree = true;
};
Ab4Report ab4_I_k_check(const InjClass& c, const std::vector<Complex>& family, int k, int depth);

/* Least length of a terminating relative resolution, when one shows up
   within the probe depth. */
std::optional<int> I_codim_upper(const InjClass& c, const Obj& a, int max_depth);

/* The exact quotient functor attached to the torsion class (evaluation at
   the first vertex) and its fully faithful right adjoint section. */
Obj torsion_Q(const Obj& a);
Mor torsion_Q(const Mor& f);
Complex torsion_Q(const Complex& x);
ChainMap torsion_Q(const ChainMap& f);
Obj torsion_S(const Obj& v);
Mor torsion_S(const Mor& f);

}  // namespace resolvent
