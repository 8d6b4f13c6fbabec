#pragma once

#include <dicritical/numeric.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dicritical {

/// Dense row-major integer matrix. Indices are 0-based; the domain objects
/// that own a matrix translate from the 1-based divisor numbering.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix literal");
      for (long v : row) data_.emplace_back(v);
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const BigInt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  IntMatrix block(std::size_t rows, std::size_t cols) const {
    IntMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r, c);
    return out;
  }

  /// Vertical concatenation [this; below].
  IntMatrix stacked(const IntMatrix& below) const {
    if (below.rows_ && below.cols_ != cols_) throw InputError("stacking matrices of different widths");
    IntMatrix out(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<long>(data_.size()));
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      out += r ? ",[" : "[";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) out += ",";
        out += (*this)(r, c).get_str();
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Row vector times matrix: out_c = sum_r v_r * M(r, c).
inline IntVector row_times(std::span<const BigInt> v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw InputError("row vector length does not match matrix height");
  IntVector out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += v[r] * m(r, c);
  }
  return out;
}

/// Determinant by Bareiss fraction-free elimination; every intermediate
/// division is exact.
inline BigInt bareiss_determinant(IntMatrix a) {
  if (!a.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// det A_1, ..., det A_n for the leading principal submatrices.
inline IntVector leading_principal_minors(const IntMatrix& a) {
  if (!a.square()) throw InputError("leading minors of a non-square matrix");
  IntVector out;
  out.reserve(a.rows());
  for (std::size_t t = 1; t <= a.rows(); ++t) out.push_back(bareiss_determinant(a.block(t, t)));
  return out;
}

/// Solves r * A = b for r over the rationals. Returns nullopt when A is
/// singular or the unique solution is not integral.
inline std::optional<IntVector> solve_left_integral(const IntMatrix& a, std::span<const BigInt> b) {
  if (!a.square() || b.size() != a.cols()) throw InputError("solve_left: dimension mismatch");
  const std::size_t n = a.rows();
  // Transposed system A^T r^T = b^T, augmented.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(j, i);
    m[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[col], m[piv]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j <= n; ++j) m[col][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][n].get_den() != 1) return std::nullopt;
    out[i] = m[i][n].get_num();
  }
  return out;
}

}  // namespace dicritical
