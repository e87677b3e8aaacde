#include "resolvent/linalg.hpp"

#include <functional>
#include <random>

#include "doctest.h"

using namespace resolvent;

namespace {

/* Independent rank oracle: largest k with a nonzero k x k minor, determinants
   by cofactor expansion. */
uint32_t det_minor(const Matrix& m, std::vector<int> rows, std::vector<int> cols) {
  size_t n = rows.size();
  if (n == 0) return 1;
  uint32_t acc = 0;
  for (size_t i = 0; i < n; ++i) {
    uint32_t a = m.at(rows[i], cols[0]);
    if (a) {
      std::vector<int> sub_rows;
      for (size_t j = 0; j < n; ++j)
        if (j != i) sub_rows.push_back(rows[j]);
      uint32_t term = fp::mul(a, det_minor(m, sub_rows, {cols.begin() + 1, cols.end()}));
      acc = (i % 2 == 0) ? fp::add(acc, term) : fp::sub(acc, term);
    }
  }
  return acc;
}

bool has_nonzero_minor(const Matrix& m, int k) {
  std::vector<int> rows(k), cols(k);
  std::function<bool(int, int)> pick_rows = [&](int idx, int start) -> bool {
    if (idx == k) {
      std::function<bool(int, int)> pick_cols = [&](int cidx, int cstart) -> bool {
        if (cidx == k) return det_minor(m, rows, cols) != 0;
        for (int c = cstart; c < m.cols(); ++c) {
          cols[cidx] = c;
          if (pick_cols(cidx + 1, c + 1)) return true;
        }
        return false;
      };
      return pick_cols(0, 0);
    }
    for (int r = start; r < m.rows(); ++r) {
      rows[idx] = r;
      if (pick_rows(idx + 1, r + 1)) return true;
    }
    return false;
  };
  return pick_rows(0, 0);
}

int rank_oracle(const Matrix& m) {
  int bound = std::min(m.rows(), m.cols());
  for (int k = bound; k >= 1; --k)
    if (has_nonzero_minor(m, k)) return k;
  return 0;
}

}  // namespace

TEST_CASE("modulus is prime-checked") {
  CHECK_THROWS(fp::set_modulus(4));
  CHECK_THROWS(fp::set_modulus(1));
  fp::set_modulus(5);
  CHECK(fp::modulus() == 5);
}

TEST_CASE("field inverse") {
  fp::set_modulus(5);
  for (uint32_t a = 1; a < 5; ++a) CHECK(fp::mul(a, fp::inv(a)) == 1);
  CHECK_THROWS(fp::inv(0));
}

TEST_CASE("rank agrees with minor-expansion oracle") {
  fp::set_modulus(5);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> dd(0, 4);
    Matrix m = random_matrix(rng, dd(rng), dd(rng));
    CHECK(rank(m) == rank_oracle(m));
  }
}

TEST_CASE("rref has identity on pivot columns and leftmost pivots") {
  fp::set_modulus(5);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dd(0, 5);
    Matrix m = random_matrix(rng, dd(rng), dd(rng));
    auto rr = rref(m);
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
      for (int r = 0; r < rr.r.rows(); ++r)
        CHECK(rr.r.at(r, rr.pivots[i]) == (r == static_cast<int>(i) ? 1u : 0u));
      // nothing nonzero to the left in the pivot row
      for (int c = 0; c < rr.pivots[i]; ++c) CHECK(rr.r.at(static_cast<int>(i), c) == 0);
    }
  }
}

TEST_CASE("kernel basis: membership, independence, completeness") {
  fp::set_modulus(5);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> dd(0, 4);
    Matrix m = random_matrix(rng, dd(rng), dd(rng));
    Matrix k = kernel_basis(m);
    CHECK((m * k).is_zero());
    CHECK(rank(k) == k.cols());
    CHECK(k.cols() == m.cols() - rank(m));
  }
}

TEST_CASE("kernel basis exhaustively over tiny matrices") {
  // every vector in ker(m) is a combination of the basis: count solutions of m v = 0
  fp::set_modulus(3);
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> dd(0, 3);
    Matrix m = random_matrix(rng, dd(rng), dd(rng));
    Matrix k = kernel_basis(m);
    int count = 0;
    int n = m.cols();
    std::vector<uint32_t> v(n, 0);
    while (true) {
      Matrix vv(n, 1);
      for (int i = 0; i < n; ++i) vv.at(i, 0) = v[i];
      if ((m * vv).is_zero()) {
        ++count;
        CHECK(solve(k, vv).has_value());
      }
      int i = 0;
      while (i < n && ++v[i] == 3) v[i++] = 0;
      if (i == n) break;
    }
    int expect = 1;
    for (int i = 0; i < k.cols(); ++i) expect *= 3;
    CHECK(count == expect);
  }
  fp::set_modulus(5);
}

TEST_CASE("solve on constructed consistent systems; rejects inconsistent ones") {
  fp::set_modulus(5);
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> dd(0, 4);
    int r = dd(rng), c = dd(rng), k = dd(rng);
    Matrix a = random_matrix(rng, r, c);
    Matrix x = random_matrix(rng, c, k);
    Matrix b = a * x;
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
  }
  Matrix a(2, 1, {1, 2});
  Matrix b(2, 1, {1, 3});
  CHECK(!solve(a, b).has_value());
}

TEST_CASE("solve_left and inverse") {
  fp::set_modulus(5);
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dd(0, 4);
    int r = dd(rng), c = dd(rng), k = dd(rng);
    Matrix a = random_matrix(rng, r, c);
    Matrix x = random_matrix(rng, k, r);
    auto sol = solve_left(a, x * a);
    REQUIRE(sol.has_value());
    CHECK(*sol * a == x * a);
  }
  Matrix s(2, 2, {1, 2, 3, 4});
  auto inv = inverse(s);
  REQUIRE(inv.has_value());
  CHECK((*inv * s).is_identity());
  CHECK(!inverse(Matrix(2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("column space and basis extension") {
  fp::set_modulus(5);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dd(0, 4);
    Matrix m = random_matrix(rng, dd(rng), dd(rng));
    Matrix c = column_space_basis(m);
    CHECK(rank(c) == c.cols());
    CHECK(c.cols() == rank(m));
    CHECK(solve(c, m).has_value());  // every column of m lies in the span
    Matrix e = extend_to_basis(c);
    CHECK(rank(hstack(c, e)) == m.rows());
    CHECK(c.cols() + e.cols() == m.rows());
  }
}

TEST_CASE("vec round trip and block helpers") {
  fp::set_modulus(5);
  Matrix m(2, 3, {1, 2, 3, 4, 0, 1});
  CHECK(unvec(vec(m), 2, 3) == m);
  Matrix d = block_diag({Matrix::identity(2), Matrix(1, 1, {3})});
  CHECK(d.rows() == 3);
  CHECK(d.at(2, 2) == 3);
  CHECK(d.at(0, 2) == 0);
}
