#pragma once

// Truncated power series in q with integer coefficients, and the generating
// series Q^r_d whose lowest term is theta * q^C.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quiver/numeric.hpp"
#include "quiver/quiver_core.hpp"

namespace quiver {

/// c_0 + c_1 q + ... + c_T q^T, known modulo q^{T+1}.
class QSeries {
 public:
  explicit QSeries(int truncation);
  QSeries(std::vector<BigInt> coeffs, int truncation);

  static QSeries one(int truncation);
  /// q^k (zero if k > T).
  static QSeries monomial(int k, int truncation);

  int truncation() const { return truncation_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  BigInt& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  bool is_zero() const;
  /// Same series known to a smaller degree.
  QSeries truncated(int t) const;
  /// Multiplies by q^k.
  QSeries shifted(int k) const;
  QSeries negated() const;

  /// Terms "c q^k" for nonzero coefficients, e.g. "2q^7 + 8q^8".
  std::string to_string() const;

  // Results carry the smaller of the two truncations.
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  /// Coefficient-wise equality up to the common truncation.
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  std::vector<BigInt> coeffs_;
  int truncation_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);
/// Requires constant term +1 or -1; throws InvalidInput otherwise.
QSeries series_inverse(const QSeries& a);

/// P_s = 1 / ((1-q)(1-q^2)...(1-q^s)).
QSeries pochhammer_inverse(int s, int truncation);
/// P_h = product of P_{h_i}.
QSeries pochhammer_multi(const std::vector<int>& h, int truncation);
/// (1-q)(1-q^2)...(1-q^s).
QSeries pochhammer(int s, int truncation);

/// Q^r_d summed orbit by orbit: q^codim(m) P_m over m with m_0N = r.
QSeries q_series_bruteforce(const DimensionVector& d, int r, int truncation,
                            std::uint64_t cap = kDefaultEnumerationCap);

/// P_r sum_{s=0}^{min d - r} (-1)^s q^{s(s-1)/2} P_s P_{d-r-s}.
QSeries q_series_closed(const DimensionVector& d, int r, int truncation);

/// (C, theta): lowest nonzero degree and its coefficient. Throws NotFound
/// when the series vanishes up to its truncation.
std::pair<int, BigInt> extract_C_theta(const QSeries& s);

}  // namespace quiver
