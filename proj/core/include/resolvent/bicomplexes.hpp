#pragma once
#include <map>
#include <utility>
#include <vector>

#include "resolvent/complexes.hpp"

namespace resolvent {

/* Finitely supported grid C^(r,c): r is the vertical (resolution) index, c the
   horizontal (complex) degree. d0 raises c, d1 raises r. `anticommute` selects
   the convention: true for a bicomplex (d1 d0 + d0 d1 = 0, totalizable), false
   for a commuting double complex. */
struct Bicomplex {
  Backend backend;
  bool anticommute = true;
  int r0 = 0, r1 = -1, c0 = 0, c1 = -1;
  std::vector<Obj> objs;  // (r - r0) * width + (c - c0), width = c1 - c0 + 1
  std::vector<Mor> d0;    // same layout; entries at c = c1 are zero maps
  std::vector<Mor> d1;    // entries at r = r1 are zero maps

  int width() const { return c1 - c0 + 1; }
  int height() const { return r1 - r0 + 1; }
  bool empty() const { return r1 < r0 || c1 < c0; }
  Obj obj_at(int r, int c) const;
  Mor d0_at(int r, int c) const;
  Mor d1_at(int r, int c) const;
};

/* Build and validate: d0*d0 = 0, d1*d1 = 0, squares anticommute or commute. */
Bicomplex make_bicomplex(const Backend& b, bool anticommute, int r0, int c0,
                         std::vector<std::vector<Obj>> rows,
                         std::vector<std::vector<Mor>> d0_rows,
                         std::vector<std::vector<Mor>> d1_rows);

/* Multiply vertical differentials in column c by (-1)^c. Involutive; flips
   between the commuting and anticommuting conventions. */
Bicomplex sign_trick(const Bicomplex& b);
Bicomplex unsign(const Bicomplex& b);

struct Totalization {
  Complex cx;
  int n_lo = 0;
  std::vector<std::vector<int>> rows_present;  // per total degree n - n_lo
  std::vector<Biproduct> parts;                // matching biproducts
  Mor inj(int r, int c) const;                 // C^(r,c) -> Tot^(r+c)
  Mor proj(int r, int c) const;
};

Totalization tot_bicomplex(const Bicomplex& b);  // requires anticommute

/* Multicomplex: differentials d_k of bidegree (k, 1-k), k = 0..K, subject to
   sum_{i+j=n} d_i d_j = 0 for every n. */
struct Multicomplex {
  Backend backend;
  int r0 = 0, r1 = -1, c0 = 0, c1 = -1;
  std::vector<Obj> objs;
  std::vector<std::map<std::pair<int, int>, Mor>> ds;  // ds[k][{r,c}]

  int width() const { return c1 - c0 + 1; }
  bool empty() const { return r1 < r0 || c1 < c0; }
  Obj obj_at(int r, int c) const;
  Mor d_at(int k, int r, int c) const;
};

Multicomplex make_multicomplex(const Backend& b, int r0, int c0,
                               std::vector<std::vector<Obj>> rows,
                               std::vector<std::map<std::pair<int, int>, Mor>> ds);

Totalization tot_multicomplex(const Multicomplex& m);

/* Compatibility validator for a degree-indexed family phi_k of bidegree (k,-k)
   maps src -> dst: checks sum_{i+j=n} phi_i d_j = sum_{i+j=n} d_i phi_j. */
bool check_multicomplex_morphism(const Multicomplex& src, const Multicomplex& dst,
                                 const std::vector<std::map<std::pair<int, int>, Mor>>& phis);

/* Columns are injective resolutions of the degreewise objects of x (depth
   rows), all horizontal and higher differentials zero. Returns the
   multicomplex together with the degreewise augmentations x^n -> column n. */
struct TrivialDiffResult {
  Multicomplex mc;
  std::vector<Mor> lambda0;  // index n - x.lo
};
TrivialDiffResult trivial_diff_multicomplex(const Complex& x, int depth);

}  // namespace resolvent
