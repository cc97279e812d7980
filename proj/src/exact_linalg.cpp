#include "quiver/exact_linalg.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "quiver/errors.hpp"

namespace quiver {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

bool RationalMatrix::all_integral() const {
  for (const auto& v : data_) {
    if (v.get_den() != 1) return false;
  }
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product: inner dimensions differ");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix difference: shapes differ");
  RationalMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Bareiss elimination on int64. Returns nullopt on overflow.
std::optional<std::size_t> bareiss_rank_int64(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  std::int64_t prev = 1;
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * cols + j]; };
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    }
    const std::int64_t p = at(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int64_t f = at(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        std::int64_t x, y, z;
        if (__builtin_mul_overflow(p, at(i, j), &x)) return std::nullopt;
        if (__builtin_mul_overflow(f, at(rank, j), &y)) return std::nullopt;
        if (__builtin_sub_overflow(x, y, &z)) return std::nullopt;
        at(i, j) = z / prev;  // exact by Sylvester's identity
      }
      at(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

// Scales every row by the lcm of its denominators.
std::vector<BigInt> integer_rows(const RationalMatrix& m) {
  std::vector<BigInt> out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i * m.cols() + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  return out;
}

}  // namespace

std::size_t bareiss_rank(std::vector<BigInt> a, std::size_t rows, std::size_t cols) {
  bool small = true;
  for (const auto& v : a) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) {
      small = false;
      break;
    }
  }
  if (small) {
    std::vector<std::int64_t> b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = a[i].get_si();
    if (auto r = bareiss_rank_int64(std::move(b), rows, cols)) return *r;
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * cols + j]; };
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    }
    const BigInt p = at(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const BigInt f = at(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt v = p * at(i, j) - f * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t bareiss_rank(const std::vector<std::int64_t>& a, std::size_t rows, std::size_t cols) {
  if (auto r = bareiss_rank_int64(a, rows, cols)) return *r;
  std::vector<BigInt> big(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) big[i] = static_cast<long>(a[i]);
  return bareiss_rank(std::move(big), rows, cols);
}

std::size_t exact_rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_rank(integer_rows(m), m.rows(), m.cols());
}

std::vector<std::vector<Rational>> null_space(const RationalMatrix& m) {
  // Gauss-Jordan over Q; sizes here are small (test certificates).
  RationalMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational frobenius_sq(const RationalMatrix& m) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
  }
  return s;
}

}  // namespace quiver
