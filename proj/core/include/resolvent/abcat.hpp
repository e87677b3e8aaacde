#pragma once
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "resolvent/linalg.hpp"

namespace resolvent {

/* Three finite-dimensional abelian backends over F_p:
   - VectFp: plain vector spaces.
   - NilpMod(n): pairs (V, X) with X^n = 0, i.e. modules over k[x]/(x^n).
   - RepA2: representations (V1, V2, f: V1 -> V2) of the quiver 1 -> 2. */
enum class BackendKind { VectFp, NilpMod, RepA2 };

struct Backend {
  BackendKind kind = BackendKind::VectFp;
  int nilp = 1;  // nilpotency index, NilpMod only
  bool operator==(const Backend&) const = default;
};

int vertex_count(const Backend& b);
std::string backend_name(const Backend& b);

struct Obj {
  Backend backend;
  std::vector<int> dims;  // one entry per vertex
  Matrix op;              // NilpMod: X (d x d); RepA2: f (d2 x d1); VectFp: empty

  int dim(int v = 0) const { return dims[v]; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  bool operator==(const Obj&) const = default;
};

Obj vect_obj(int d);
Obj nilp_obj(int nilp, const Matrix& x);   // validates x^nilp = 0
Obj nilp_regular(int nilp);                // k[x]/(x^n) as a module over itself
Obj repa2_obj(const Matrix& f);            // dims read off the shape of f
Obj repa2_obj(int d1, int d2, const Matrix& f);
Obj zero_obj(const Backend& b);

struct Mor {
  Obj dom, cod;
  std::vector<Matrix> comp;  // one matrix per vertex
  bool operator==(const Mor&) const = default;
};

Mor make_mor(const Obj& dom, const Obj& cod, std::vector<Matrix> comp);
Mor id_mor(const Obj& a);
Mor zero_mor(const Obj& dom, const Obj& cod);
Mor compose(const Mor& g, const Mor& f);  // g after f
Mor mor_add(const Mor& f, const Mor& g);
Mor mor_sub(const Mor& f, const Mor& g);
Mor mor_neg(const Mor& f);
bool mor_is_zero(const Mor& f);
bool is_mono(const Mor& f);
bool is_epi(const Mor& f);
bool is_iso(const Mor& f);
std::optional<Mor> mor_inverse(const Mor& f);

struct SubQuotient {
  Obj obj;
  Mor map;  // kernel: mono obj -> dom; cokernel: epi cod -> obj
};
SubQuotient kernel(const Mor& f);
SubQuotient cokernel(const Mor& f);

struct ImageParts {
  Obj obj;
  Mor mono;  // obj -> cod(f)
  Mor epi;   // dom(f) -> obj
};
ImageParts image(const Mor& f);

struct Biproduct {
  Obj obj;
  std::vector<Mor> inj;   // summand -> obj
  std::vector<Mor> proj;  // obj -> summand
};
Biproduct biproduct(const std::vector<Obj>& parts);

struct PushoutResult {
  Obj obj;
  Mor from_b;  // cod(f) -> obj
  Mor from_c;  // cod(g) -> obj
};
PushoutResult pushout(const Mor& f, const Mor& g);  // common domain

bool is_injective_obj(const Obj& a);
Mor injective_envelope(const Obj& a);  // mono a -> E with E the minimal injective over a

/* Jordan chains of a nilpotent operator: each returned matrix has columns
   v, Xv, ..., X^(l-1)v for a chain of length l; all columns together form a basis. */
std::vector<Matrix> nilpotent_jordan_chains(const Matrix& x);

/* Linear-algebra view of Hom(a, b): a deterministic basis of the constraint
   kernel, plus coordinates of a given morphism in that basis. */
std::vector<Mor> hom_basis(const Obj& a, const Obj& b);
int hom_dim(const Obj& a, const Obj& b);
Mor mor_from_coords(const Obj& a, const Obj& b, const std::vector<Mor>& basis, const Matrix& coords);
Matrix mor_coords(const std::vector<Mor>& basis, const Mor& m);

/* All matrix entries of a morphism stacked into one column (componentwise vec). */
Matrix mor_entries_vec(const Mor& m);

/* Factorization solvers: find alpha with alpha∘u = g, resp. s with t∘s = g. */
std::optional<Mor> find_left_factor(const Mor& u, const Mor& g);
std::optional<Mor> find_right_factor(const Mor& t, const Mor& g);

/* Unique factorizations through a kernel-style mono / cokernel-style epi. Throw
   if the hypothesis (image containment / vanishing on kernel) fails. */
Mor factor_through_mono(const Mor& mono, const Mor& g);
Mor factor_through_epi(const Mor& epi, const Mor& g);

bool is_split_epi(const Mor& f);
std::optional<Mor> splitting_of_epi(const Mor& f);  // section s with f∘s = id

Obj random_obj(const Backend& b, std::mt19937_64& rng, int max_dim);
Mor random_mor(std::mt19937_64& rng, const Obj& a, const Obj& b);

/* Human-readable isomorphism type: VectFp "k^d"; NilpMod multiset of Jordan
   block sizes; RepA2 decomposition into S1/I2/S2 multiplicities. */
std::string iso_type(const Obj& a);

}  // namespace resolvent
