#include "quiver/qseries.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "quiver/errors.hpp"

namespace quiver {

QSeries::QSeries(int truncation) : truncation_(truncation) {
  if (truncation < 0) throw InvalidInput("series truncation must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(truncation) + 1, 0);
}

QSeries::QSeries(std::vector<BigInt> coeffs, int truncation) : QSeries(truncation) {
  if (coeffs.size() > coeffs_.size()) throw InvalidInput("more coefficients than the truncation allows");
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

QSeries QSeries::one(int truncation) { return monomial(0, truncation); }

QSeries QSeries::monomial(int k, int truncation) {
  QSeries s(truncation);
  if (k >= 0 && k <= truncation) s[k] = 1;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

QSeries QSeries::truncated(int t) const {
  if (t > truncation_) throw InvalidInput("cannot raise a series truncation");
  return QSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + t + 1), t);
}

QSeries QSeries::shifted(int k) const {
  QSeries s(truncation_);
  for (int i = 0; i + k <= truncation_; ++i) s[i + k] = coeffs_[i];
  return s;
}

QSeries QSeries::negated() const {
  QSeries s(truncation_);
  for (int i = 0; i <= truncation_; ++i) s[i] = -coeffs_[i];
  return s;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= truncation_; ++k) {
    BigInt c = coeffs_[k];
    if (c == 0) continue;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0) {
      os << '-';
      c = abs(c);
    }
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'q';
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  os << " + O(q^" << truncation_ + 1 << ')';
  return os.str();
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries s(std::min(a.truncation(), b.truncation()));
  for (int k = 0; k <= s.truncation(); ++k) s[k] = a[k] + b[k];
  return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + b.negated(); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries s(std::min(a.truncation(), b.truncation()));
  const int t = s.truncation();
  for (int i = 0; i <= t; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= t; ++j) {
      if (b[j] != 0) s[i + j] += a[i] * b[j];
    }
  }
  return s;
}

bool operator==(const QSeries& a, const QSeries& b) {
  const int t = std::min(a.truncation(), b.truncation());
  for (int k = 0; k <= t; ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

QSeries series_add(const QSeries& a, const QSeries& b) { return a + b; }

QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries series_inverse(const QSeries& a) {
  if (a[0] != 1 && a[0] != -1) throw InvalidInput("series inverse needs constant term +1 or -1");
  const int t = a.truncation();
  QSeries inv(t);
  // a0 is its own inverse.
  inv[0] = a[0];
  for (int n = 1; n <= t; ++n) {
    BigInt acc = 0;
    for (int k = 1; k <= n; ++k) acc += a[k] * inv[n - k];
    inv[n] = -acc * a[0];
  }
  return inv;
}

QSeries pochhammer_inverse(int s, int truncation) {
  if (s < 0) throw InvalidInput("Pochhammer index must be nonnegative");
  QSeries p = QSeries::one(truncation);
  // Dividing by (1 - q^i) is a running sum with stride i.
  for (int i = 1; i <= s; ++i) {
    for (int n = i; n <= truncation; ++n) p[n] += p[n - i];
  }
  return p;
}

QSeries pochhammer_multi(const std::vector<int>& h, int truncation) {
  QSeries p = QSeries::one(truncation);
  for (int s : h) {
    if (s < 0) throw InvalidInput("Pochhammer index must be nonnegative");
    for (int i = 1; i <= s; ++i) {
      for (int n = i; n <= truncation; ++n) p[n] += p[n - i];
    }
  }
  return p;
}

QSeries pochhammer(int s, int truncation) {
  QSeries p = QSeries::one(truncation);
  for (int i = 1; i <= s; ++i) {
    for (int n = truncation; n >= i; --n) p[n] -= p[n - i];
  }
  return p;
}

QSeries q_series_bruteforce(const DimensionVector& d, int r, int truncation, std::uint64_t cap) {
  require_rank_in_range(d, r);
  QSeries total(truncation);
  std::map<std::vector<int>, QSeries> cache;
  EnumerationOptions opts;
  opts.cap = cap;
  opts.top_min = r;
  opts.top_max = r;
  for_each_kostant_partition(
      d,
      [&](const KostantPartition& m) {
        const auto c = orbit_codim_exact(m);
        if (c > truncation) return;
        std::vector<int> parts;
        for (int v : m.entries()) {
          if (v > 0) parts.push_back(v);
        }
        std::sort(parts.begin(), parts.end());
        auto it = cache.find(parts);
        if (it == cache.end()) it = cache.emplace(parts, pochhammer_multi(parts, truncation)).first;
        const int shift = static_cast<int>(c.get_si());
        for (int k = 0; k + shift <= truncation; ++k) total[k + shift] += it->second[k];
      },
      opts);
  return total;
}

QSeries q_series_closed(const DimensionVector& d, int r, int truncation) {
  require_rank_in_range(d, r);
  QSeries sum(truncation);
  const int top = d.min() - r;
  for (int s = 0; s <= top; ++s) {
    const long shift = static_cast<long>(s) * (s - 1) / 2;
    if (shift > truncation) break;
    std::vector<int> h = d.shifted(-r - s).entries();
    h.push_back(s);
    QSeries term = pochhammer_multi(h, truncation).shifted(static_cast<int>(shift));
    sum = (s % 2 == 0) ? sum + term : sum - term;
  }
  return pochhammer_inverse(r, truncation) * sum;
}

std::pair<int, BigInt> extract_C_theta(const QSeries& s) {
  for (int k = 0; k <= s.truncation(); ++k) {
    if (s[k] != 0) return {k, s[k]};
  }
  throw NotFound("series vanishes up to q^" + std::to_string(s.truncation()) + "; raise the truncation");
}

}  // namespace quiver
