#pragma once
#include <optional>
#include <vector>

#include "resolvent/abcat.hpp"

namespace resolvent {

/* Cochain complex with finite support window [lo, hi]. Objects outside the
   window are zero; differentials raise degree by one and compose to zero. */
struct Complex {
  Backend backend;
  int lo = 0;
  std::vector<Obj> objs;   // objs[i] sits in degree lo + i
  std::vector<Mor> diffs;  // diffs[i]: objs[i] -> objs[i+1]

  int hi() const { return lo + static_cast<int>(objs.size()) - 1; }
  bool empty() const { return objs.empty(); }
  Obj obj_at(int n) const;
  Mor d(int n) const;  // zero morphism when outside the stored window
};

Complex make_complex(const Backend& b, int lo, std::vector<Obj> objs, std::vector<Mor> diffs);
Complex zero_complex(const Backend& b);
Complex trim(const Complex& x);  // drop zero objects at both ends
bool complex_eq(const Complex& x, const Complex& y);

struct ChainMap {
  Complex src, dst;
  int lo = 0;
  std::vector<Mor> comps;  // comps[i] in degree lo + i
  Mor at(int n) const;
};

ChainMap make_chain_map(const Complex& src, const Complex& dst, int lo, std::vector<Mor> comps);
ChainMap id_chain_map(const Complex& x);
ChainMap zero_chain_map(const Complex& src, const Complex& dst);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap chain_map_add(const ChainMap& f, const ChainMap& g);
ChainMap chain_map_sub(const ChainMap& f, const ChainMap& g);
bool chain_map_is_zero(const ChainMap& f);
bool is_degreewise_iso(const ChainMap& f);
std::optional<ChainMap> chain_map_inverse(const ChainMap& f);

Complex shift(const Complex& x, int k);  // (shift^k x)^n = x^(n+k), differential scaled by (-1)^k

struct TruncationResult {
  Complex cx;
  ChainMap map;  // left: projection x -> cx; right: inclusion cx -> x
};
TruncationResult truncate_left(const Complex& x, int k);   // degree k becomes x^k / coboundaries
TruncationResult truncate_right(const Complex& x, int k);  // degree k becomes cocycles

Complex stalk(int k, const Obj& a);
Complex disk(int k, const Obj& a);  // a in degrees k, k+1 with identity differential

Complex direct_sum(const std::vector<Complex>& parts);

struct Cocycles {
  Obj obj;
  Mor incl;  // obj -> x^n
};
Cocycles cocycles(const Complex& x, int n);
Cocycles coboundaries(const Complex& x, int n);

struct Cohomology {
  Obj h;
  Obj z;
  Mor z_incl;  // z -> x^n
  Mor proj;    // z -> h, epi
};
Cohomology cohomology(const Complex& x, int n);
Obj cohomology_obj(const Complex& x, int n);

Mor induced_H(const ChainMap& f, int n);
bool is_quasi_iso(const ChainMap& f);
bool is_quasi_iso_in(const ChainMap& f, int lo, int hi);
bool is_exact(const Complex& x);
bool is_exact_in(const Complex& x, int lo, int hi);

struct ConeResult {
  Complex cx;          // cone^n = src^(n+1) + dst^n
  ChainMap incl_dst;   // dst -> cone
  ChainMap proj_src;   // cone -> shift(src, 1)
};
ConeResult cone(const ChainMap& f);

struct Homotopy {
  int lo = 0;
  std::vector<Mor> comps;  // h^n: src^n -> dst^(n-1) in degree lo + i
  Mor at(int n, const Complex& src, const Complex& dst) const;
};

/* Solve f - g = d h + h d as one global linear system over the hom bases. */
std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g);
// homotopy between f and g verified only in degrees [lo, hi]
std::optional<Homotopy> find_homotopy_in(const ChainMap& f, const ChainMap& g, int lo, int hi);

/* Chain map t: src -> dst with t o through = rhs, found as one linear system
   over the degreewise hom bases. */
std::optional<ChainMap> solve_chain_map_through(const Complex& src, const Complex& dst,
                                                const ChainMap& through, const ChainMap& rhs);
bool check_homotopy(const ChainMap& f, const ChainMap& g, const Homotopy& h);

/* Certificate-or-not-found isomorphism search: enumerates the chain-map space
   when it has at most p^6 elements, otherwise samples max_trials random
   candidates. A nullopt answer never claims non-isomorphism. */
std::optional<ChainMap> find_complex_iso(const Complex& x, const Complex& y, uint64_t seed,
                                         int max_trials = 64);

/* Precondition: x^n is a biproduct of k equal summands and d^(n-1) has equal
   components into each. Returns a new complex whose incoming differential hits
   only the first summand, with the certifying isomorphism. */
struct ReorderResult {
  Complex cx;
  ChainMap iso;  // x -> cx
};
ReorderResult reorder_differentials(const Complex& x, int n, int k);

}  // namespace resolvent
