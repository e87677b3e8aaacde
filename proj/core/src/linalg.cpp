#include "resolvent/linalg.hpp"

#include <atomic>

namespace resolvent::fp {

namespace {
std::atomic<uint32_t> g_modulus{5};
}

uint32_t modulus() { return g_modulus.load(std::memory_order_relaxed); }

void set_modulus(uint32_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("modulus must be prime");
  g_modulus.store(p, std::memory_order_relaxed);
}

uint32_t inv(uint32_t a) {
  if (a == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(p-2)
  uint32_t p = modulus();
  uint64_t base = a % p, r = 1;
  uint32_t e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

}  // namespace resolvent::fp

namespace resolvent {

Matrix::Matrix(int rows, int cols, std::initializer_list<int> vals) : Matrix(rows, cols) {
  require(static_cast<int>(vals.size()) == rows * cols, ErrKind::ShapeMismatch, "initializer size");
  int i = 0;
  for (int v : vals) {
    a_[i++] = fp::normalize(v, fp::modulus());
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (uint32_t v : a_)
    if (v) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::col(int c) const {
  Matrix v(rows_, 1);
  for (int i = 0; i < rows_; ++i) v.at(i, 0) = at(i, c);
  return v;
}

Matrix Matrix::cols_slice(const std::vector<int>& idx) const {
  Matrix m(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), ErrKind::ShapeMismatch, "matrix product shape");
  uint64_t p = fp::modulus();
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      uint64_t v = a.at(i, k);
      if (!v) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = static_cast<uint32_t>((c.at(i, j) + v * b.at(k, j)) % p);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrKind::ShapeMismatch, "matrix sum shape");
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = fp::add(a.at(i, j), b.at(i, j));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrKind::ShapeMismatch, "matrix diff shape");
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = fp::sub(a.at(i, j), b.at(i, j));
  return c;
}

Matrix operator-(const Matrix& a) { return scale(a, fp::neg(1)); }

Matrix scale(const Matrix& a, uint32_t s) {
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = fp::mul(a.at(i, j), s);
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) { return hstack({a, b}, a.rows()); }
Matrix vstack(const Matrix& a, const Matrix& b) { return vstack({a, b}, a.cols()); }

Matrix hstack(const std::vector<Matrix>& parts, int rows) {
  int cols = 0;
  for (const auto& m : parts) {
    require(m.rows() == rows, ErrKind::ShapeMismatch, "hstack rows");
    cols += m.cols();
  }
  Matrix r(rows, cols);
  int off = 0;
  for (const auto& m : parts) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < m.cols(); ++j) r.at(i, off + j) = m.at(i, j);
    off += m.cols();
  }
  return r;
}

Matrix vstack(const std::vector<Matrix>& parts, int cols) {
  int rows = 0;
  for (const auto& m : parts) {
    require(m.cols() == cols, ErrKind::ShapeMismatch, "vstack cols");
    rows += m.rows();
  }
  Matrix r(rows, cols);
  int off = 0;
  for (const auto& m : parts) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < cols; ++j) r.at(off + i, j) = m.at(i, j);
    off += m.rows();
  }
  return r;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
  int rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix r(rows, cols);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) r.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return r;
}

Matrix mat_pow(const Matrix& a, int k) {
  require(a.rows() == a.cols(), ErrKind::ShapeMismatch, "mat_pow square");
  Matrix r = Matrix::identity(a.rows());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}};
  Matrix& r = out.r;
  int row = 0;
  for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < r.rows(); ++i)
      if (r.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(row, j), r.at(piv, j));
    uint32_t inv = fp::inv(r.at(row, col));
    for (int j = col; j < r.cols(); ++j) r.at(row, j) = fp::mul(r.at(row, j), inv);
    for (int i = 0; i < r.rows(); ++i) {
      if (i == row || !r.at(i, col)) continue;
      uint32_t f = r.at(i, col);
      for (int j = col; j < r.cols(); ++j)
        r.at(i, j) = fp::sub(r.at(i, j), fp::mul(f, r.at(row, j)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Matrix kernel_basis(const Matrix& m) {
  auto rr = rref(m);
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (pi < rr.pivots.size() && rr.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix k(m.cols(), static_cast<int>(free_cols.size()));
  for (int j = 0; j < k.cols(); ++j) {
    int fc = free_cols[j];
    k.at(fc, j) = 1;
    for (size_t pi = 0; pi < rr.pivots.size(); ++pi)
      k.at(rr.pivots[pi], j) = fp::neg(rr.r.at(static_cast<int>(pi), fc));
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrKind::ShapeMismatch, "solve shape");
  auto rr = rref(hstack(a, b));
  // any pivot in the b-block means inconsistency
  for (int c : rr.pivots)
    if (c >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (size_t pi = 0; pi < rr.pivots.size(); ++pi)
    for (int j = 0; j < b.cols(); ++j)
      x.at(rr.pivots[pi], j) = rr.r.at(static_cast<int>(pi), a.cols() + j);
  return x;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  auto xt = solve(a.transpose(), b.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = solve(a, Matrix::identity(a.rows()));
  if (!x || !((*x * a).is_identity())) return std::nullopt;
  return x;
}

Matrix column_space_basis(const Matrix& m) { return m.cols_slice(rref(m).pivots); }

Matrix extend_to_basis(const Matrix& basis) {
  int n = basis.rows();
  std::vector<int> chosen;
  Matrix cur = basis;
  int r = rank(cur);
  require(r == basis.cols(), ErrKind::PreconditionViolation, "extend_to_basis: dependent columns");
  for (int i = 0; i < n && r < n; ++i) {
    Matrix e(n, 1);
    e.at(i, 0) = 1;
    Matrix trial = hstack(cur, e);
    if (rank(trial) > r) {
      cur = trial;
      ++r;
      chosen.push_back(i);
    }
  }
  Matrix ext(n, static_cast<int>(chosen.size()));
  for (int j = 0; j < ext.cols(); ++j) ext.at(chosen[j], j) = 1;
  return ext;
}

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<uint32_t> d(0, fp::modulus() - 1);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

Matrix vec(const Matrix& m) {
  Matrix v(m.rows() * m.cols(), 1);
  int k = 0;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) v.at(k++, 0) = m.at(i, j);
  return v;
}

Matrix unvec(const Matrix& v, int rows, int cols) {
  require(v.rows() == rows * cols && v.cols() == 1, ErrKind::ShapeMismatch, "unvec shape");
  Matrix m(rows, cols);
  int k = 0;
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = v.at(k++, 0);
  return m;
}

}  // namespace resolvent
