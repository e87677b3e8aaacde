#pragma once
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "resolvent/errors.hpp"
#include "resolvent/fp.hpp"

namespace resolvent {

/* Dense matrix over F_p (session modulus).  rows x cols, row-major. */
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  Matrix(int rows, int cols, std::initializer_list<int> vals);

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint32_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  uint32_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, int64_t v) { at(r, c) = fp::normalize(v, fp::modulus()); }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix col(int c) const;
  Matrix cols_slice(const std::vector<int>& idx) const;  // select columns

 private:
  int rows_, cols_;
  std::vector<uint32_t> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix scale(const Matrix& a, uint32_t s);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts, int rows);
Matrix vstack(const std::vector<Matrix>& parts, int cols);
Matrix block_diag(const std::vector<Matrix>& blocks);
Matrix mat_pow(const Matrix& a, int k);

struct RrefResult {
  Matrix r;
  std::vector<int> pivots;  // pivot column per pivot row, leftmost-first
};

/* Reduced row echelon form with deterministic leftmost pivot selection. */
RrefResult rref(const Matrix& m);
int rank(const Matrix& m);

/* Columns form a basis of ker(m); free variables in ascending column order,
   each basis vector has 1 in its free slot. Deterministic. */
Matrix kernel_basis(const Matrix& m);

/* Solve a*x = b columnwise; free variables set to 0.  nullopt if inconsistent. */
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/* Solve x*a = b. */
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);

/* Basis of the column space: the pivot columns of m itself. */
Matrix column_space_basis(const Matrix& m);

/* Columns extending basis (independent columns) of `basis` to a basis of F_p^n
   by standard unit vectors; returns the chosen unit-vector matrix. */
Matrix extend_to_basis(const Matrix& basis);

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols);

/* vec(m): stack columns into one column vector. */
Matrix vec(const Matrix& m);
Matrix unvec(const Matrix& v, int rows, int cols);

}  // namespace resolvent
