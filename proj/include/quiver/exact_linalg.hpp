#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quiver/numeric.hpp"

namespace quiver {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool all_integral() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination. Rows are first scaled to
/// integers; the elimination runs in int64 with overflow checks and is
/// redone in arbitrary precision if any step overflows.
std::size_t exact_rank(const RationalMatrix& m);

/// Bareiss rank of an integer matrix given row-major.
std::size_t bareiss_rank(std::vector<BigInt> entries, std::size_t rows, std::size_t cols);
std::size_t bareiss_rank(const std::vector<std::int64_t>& entries, std::size_t rows, std::size_t cols);

/// Basis of the right null space {x : m x = 0}, in reduced form: each vector
/// has a 1 at one free column and 0 at the other free columns.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& m);

/// Squared Frobenius norm.
Rational frobenius_sq(const RationalMatrix& m);

}  // namespace quiver
