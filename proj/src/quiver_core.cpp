#include "quiver/quiver_core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "quiver/errors.hpp"

namespace quiver {

// ---------------------------------------------------------------------------
// DimensionVector

DimensionVector::DimensionVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw InvalidInput("dimension vector needs at least two entries (N >= 1)");
  for (int v : entries_) {
    if (v < 0) throw InvalidInput("dimension vector entries must be nonnegative");
  }
}

int DimensionVector::min() const { return *std::min_element(entries_.begin(), entries_.end()); }

int DimensionVector::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool DimensionVector::is_weakly_increasing() const { return std::is_sorted(entries_.begin(), entries_.end()); }

DimensionVector DimensionVector::sorted() const {
  auto e = entries_;
  std::sort(e.begin(), e.end());
  return DimensionVector(std::move(e));
}

std::vector<std::size_t> DimensionVector::sorting_permutation() const {
  std::vector<std::size_t> p(entries_.size());
  std::iota(p.begin(), p.end(), 0);
  std::stable_sort(p.begin(), p.end(), [&](std::size_t a, std::size_t b) { return entries_[a] < entries_[b]; });
  return p;
}

DimensionVector DimensionVector::shifted(int delta) const {
  auto e = entries_;
  for (int& v : e) {
    v += delta;
    if (v < 0) throw InvalidInput("shift makes a dimension negative");
  }
  return DimensionVector(std::move(e));
}

std::string DimensionVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// TriangularArray and friends

TriangularArray::TriangularArray(int vertices) : n_(vertices) {
  if (vertices < 1) throw InvalidInput("triangular array needs at least one vertex");
  data_.assign(static_cast<std::size_t>(vertices) * (vertices + 1) / 2, 0);
}

std::size_t TriangularArray::index(int i, int j) const {
  // Rows 0..i-1 hold n, n-1, ..., n-i+1 entries.
  return static_cast<std::size_t>(i * n_ - i * (i - 1) / 2 + (j - i));
}

int TriangularArray::get_or_zero(int i, int j) const {
  if (i < 0 || j > arrows()) return 0;
  return at(i, j);
}

std::vector<std::vector<int>> TriangularArray::rows() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n_; ++i) {
    std::vector<int> row;
    for (int j = i; j < n_; ++j) row.push_back(at(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

template <class T>
T from_rows_impl(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  T out(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n - i) throw InvalidInput("triangular row " + std::to_string(i) + " has wrong length");
    for (int j = i; j < n; ++j) out.at(i, j) = rows[i][j - i];
  }
  return out;
}

}  // namespace

KostantPartition KostantPartition::from_rows(const std::vector<std::vector<int>>& rows) {
  return from_rows_impl<KostantPartition>(rows);
}

bool KostantPartition::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](int v) { return v >= 0; });
}

DimensionVector KostantPartition::dimension_vector() const {
  std::vector<int> d(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      for (int k = i; k <= j; ++k) d[k] += at(i, j);
    }
  }
  return DimensionVector(std::move(d));
}

std::string KostantPartition::to_string() const {
  std::ostringstream os;
  bool first = true;
  os << '{';
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      if (at(i, j) == 0) continue;
      os << (first ? "" : ", ") << "m" << i << j << "=" << at(i, j);
      first = false;
    }
  }
  os << '}';
  return os.str();
}

RankPattern RankPattern::from_rows(const std::vector<std::vector<int>>& rows) {
  auto r = from_rows_impl<RankPattern>(rows);
  for (int v : r.entries()) {
    if (v < 0) throw InvalidInput("rank pattern entries must be nonnegative");
  }
  return r;
}

DimensionVector RankPattern::dimension_vector() const {
  std::vector<int> d;
  for (int i = 0; i < n_; ++i) d.push_back(at(i, i));
  return DimensionVector(std::move(d));
}

bool RankPattern::dominated_by(const RankPattern& other) const {
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (data_[k] > other.data_[k]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// MatrixTuple

MatrixTuple::MatrixTuple(DimensionVector dims, std::vector<RationalMatrix> maps)
    : dims_(std::move(dims)), maps_(std::move(maps)) {
  if (static_cast<int>(maps_.size()) != dims_.arrows()) throw InvalidInput("matrix tuple needs exactly N matrices");
  for (int k = 1; k <= dims_.arrows(); ++k) {
    const auto& a = map(k);
    if (static_cast<int>(a.rows()) != dims_[k] || static_cast<int>(a.cols()) != dims_[k - 1]) {
      throw InvalidInput("matrix A_" + std::to_string(k) + " has the wrong shape");
    }
  }
}

MatrixTuple MatrixTuple::zero(const DimensionVector& dims) {
  std::vector<RationalMatrix> maps;
  for (int k = 1; k <= dims.arrows(); ++k) maps.emplace_back(dims[k], dims[k - 1]);
  return MatrixTuple(dims, std::move(maps));
}

RationalMatrix MatrixTuple::product(int i, int j) const {
  if (i < 0 || j > dims_.arrows() || i > j) throw InvalidInput("product indices out of range");
  RationalMatrix p = RationalMatrix::identity(dims_[i]);
  for (int k = i + 1; k <= j; ++k) p = map(k) * p;
  return p;
}

// ---------------------------------------------------------------------------
// LaceDiagram

LaceDiagram::LaceDiagram(DimensionVector dims, std::vector<Lace> laces) : dims_(std::move(dims)), laces_(std::move(laces)) {
  std::vector<std::vector<bool>> used;
  for (int c = 0; c <= dims_.arrows(); ++c) used.emplace_back(dims_[c], false);
  for (const auto& lace : laces_) {
    if (lace.start < 0 || lace.end > dims_.arrows() || lace.start > lace.end ||
        static_cast<int>(lace.dots.size()) != lace.end - lace.start + 1) {
      throw InvalidInput("malformed lace");
    }
    for (int c = lace.start; c <= lace.end; ++c) {
      const int row = lace.dots[c - lace.start];
      if (row < 0 || row >= dims_[c]) throw InvalidInput("lace uses a dot outside its column");
      if (used[c][row]) throw InvalidInput("two laces share a dot");
      used[c][row] = true;
    }
  }
  for (int c = 0; c <= dims_.arrows(); ++c) {
    if (std::find(used[c].begin(), used[c].end(), false) != used[c].end()) {
      throw InvalidInput("lace diagram leaves a dot uncovered");
    }
  }
}

KostantPartition LaceDiagram::kostant() const {
  KostantPartition m(static_cast<int>(dims_.size()));
  for (const auto& lace : laces_) ++m.at(lace.start, lace.end);
  return m;
}

bool LaceDiagram::is_horizontal() const {
  return std::all_of(laces_.begin(), laces_.end(), [](const Lace& l) {
    return std::adjacent_find(l.dots.begin(), l.dots.end(), std::not_equal_to<>()) == l.dots.end();
  });
}

MatrixTuple LaceDiagram::representative() const {
  MatrixTuple t = MatrixTuple::zero(dims_);
  for (const auto& lace : laces_) {
    for (int c = lace.start; c < lace.end; ++c) {
      t.map(c + 1)(lace.dots[c + 1 - lace.start], lace.dots[c - lace.start]) = 1;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Operations

std::int64_t rep_dim(const DimensionVector& d) {
  std::int64_t s = 0;
  for (int i = 1; i <= d.arrows(); ++i) s = checked_add(s, checked_mul(d[i - 1], d[i]));
  return s;
}

namespace {

class KostantEnumerator {
 public:
  KostantEnumerator(const DimensionVector& d, const std::function<void(const KostantPartition&)>& visit,
                    const EnumerationOptions& opts)
      : n_(static_cast<int>(d.size())), cap_(d.entries()), m_(n_), visit_(visit), opts_(opts) {}

  void run() { row(0); }

 private:
  void row(int i) {
    if (i == n_) {
      if (++produced_ > opts_.cap) {
        throw ResourceLimit("Kostant partition enumeration exceeded cap " + std::to_string(opts_.cap));
      }
      visit_(m_);
      return;
    }
    cell(i, i, cap_[i]);
  }

  // Assigns m_ij; `remaining` is what column i still needs from row i.
  void cell(int i, int j, int remaining) {
    const int last = n_ - 1;
    int bound = remaining;
    for (int k = i; k <= j && bound > 0; ++k) bound = std::min(bound, cap_[k]);
    if (j == last) {
      // Column i must be exhausted by row i.
      if (bound < remaining) return;
      if (i == 0 && (remaining < opts_.top_min || (opts_.top_max && remaining > *opts_.top_max))) return;
      place(i, j, remaining);
      row(i + 1);
      place(i, j, -remaining);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      place(i, j, v);
      cell(i, j + 1, remaining - v);
      place(i, j, -v);
    }
  }

  void place(int i, int j, int v) {
    m_.at(i, j) += v;
    for (int k = i; k <= j; ++k) cap_[k] -= v;
  }

  int n_;
  std::vector<int> cap_;
  KostantPartition m_;
  const std::function<void(const KostantPartition&)>& visit_;
  const EnumerationOptions& opts_;
  std::uint64_t produced_ = 0;
};

}  // namespace

void for_each_kostant_partition(const DimensionVector& d, const std::function<void(const KostantPartition&)>& visit,
                                const EnumerationOptions& opts) {
  KostantEnumerator(d, visit, opts).run();
}

std::vector<KostantPartition> enumerate_kostant_partitions(const DimensionVector& d, std::uint64_t cap) {
  std::vector<KostantPartition> out;
  EnumerationOptions opts;
  opts.cap = cap;
  for_each_kostant_partition(d, [&](const KostantPartition& m) { out.push_back(m); }, opts);
  return out;
}

namespace {

// Counts completions given the remaining capacities of columns i..N.
class KostantCounter {
 public:
  KostantCounter(int n, std::optional<int> top, std::optional<BigInt> limit)
      : n_(n), top_(top), limit_(std::move(limit)) {}

  BigInt rows_from(int i, std::vector<int> cap) {
    if (i == n_) return 1;
    auto key = std::make_pair(i, cap);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    cells(i, i, cap[0], cap, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  // cap is indexed from column i.
  void cells(int i, int j, int remaining, std::vector<int>& cap, BigInt& total) {
    int bound = remaining;
    for (int k = i; k <= j; ++k) bound = std::min(bound, cap[k - i]);
    if (j == n_ - 1) {
      if (bound < remaining) return;
      if (i == 0 && top_ && remaining != *top_) return;
      std::vector<int> next(cap.begin() + 1, cap.end());
      for (auto& c : next) c -= remaining;
      total += rows_from(i + 1, std::move(next));
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      if (limit_ && total >= *limit_) return;
      for (int k = i; k <= j; ++k) cap[k - i] -= v;
      cells(i, j + 1, remaining - v, cap, total);
      for (int k = i; k <= j; ++k) cap[k - i] += v;
    }
  }

  int n_;
  std::optional<int> top_;
  std::optional<BigInt> limit_;
  std::map<std::pair<int, std::vector<int>>, BigInt> memo_;
};

}  // namespace

BigInt count_kostant_partitions(const DimensionVector& d, std::optional<int> top) {
  return KostantCounter(static_cast<int>(d.size()), top, std::nullopt).rows_from(0, d.entries());
}

BigInt count_kostant_partitions_saturating(const DimensionVector& d, std::optional<int> top, const BigInt& limit) {
  const BigInt n = KostantCounter(static_cast<int>(d.size()), top, limit).rows_from(0, d.entries());
  return n < limit ? n : limit;
}

RankPattern kostant_to_rank(const KostantPartition& m) {
  const int n = m.vertices();
  RankPattern r(n);
  // r_ij = m_ij + r_{i-1,j} + r_{i,j+1} - r_{i-1,j+1}
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) {
      r.at(i, j) = m.at(i, j) + r.get_or_zero(i - 1, j) + r.get_or_zero(i, j + 1) - r.get_or_zero(i - 1, j + 1);
    }
  }
  return r;
}

KostantPartition rank_to_kostant(const RankPattern& r) {
  const int n = r.vertices();
  KostantPartition m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m.at(i, j) = r.at(i, j) - r.get_or_zero(i, j + 1) - r.get_or_zero(i - 1, j) + r.get_or_zero(i - 1, j + 1);
    }
  }
  return m;
}

bool is_orbit_rank_pattern(const RankPattern& r) { return rank_to_kostant(r).is_nonnegative(); }

namespace {

struct Interval {
  int a, b;
  std::int64_t mult;
};

std::vector<Interval> support(const KostantPartition& m) {
  if (!m.is_nonnegative()) throw InvalidInput("orbit codimension needs a nonnegative Kostant partition");
  std::vector<Interval> out;
  for (int i = 0; i < m.vertices(); ++i) {
    for (int j = i; j < m.vertices(); ++j) {
      if (m.at(i, j) != 0) out.push_back({i, j, m.at(i, j)});
    }
  }
  return out;
}

// dim Ext(M_ab, M_uv) = 1 iff a+1 <= u <= b+1 <= v.
bool ext_nonzero(const Interval& x, const Interval& y) { return x.a + 1 <= y.a && y.a <= x.b + 1 && x.b + 1 <= y.b; }

}  // namespace

std::int64_t orbit_codim(const KostantPartition& m) {
  const auto s = support(m);
  std::int64_t total = 0;
  for (const auto& x : s) {
    for (const auto& y : s) {
      if (ext_nonzero(x, y)) total = checked_add(total, checked_mul(x.mult, y.mult));
    }
  }
  return total;
}

BigInt orbit_codim_exact(const KostantPartition& m) {
  try {
    return BigInt(static_cast<long>(orbit_codim(m)));
  } catch (const OverflowError&) {
  }
  const auto s = support(m);
  BigInt total = 0;
  for (const auto& x : s) {
    for (const auto& y : s) {
      if (ext_nonzero(x, y)) total += BigInt(static_cast<long>(x.mult)) * BigInt(static_cast<long>(y.mult));
    }
  }
  return total;
}

KostantPartition longest_root_shift(const KostantPartition& m, int p) {
  KostantPartition out = m;
  const int n = m.arrows();
  if (m.at(0, n) + p < 0) throw InvalidInput("longest root shift would make m_0N negative");
  out.at(0, n) += p;
  return out;
}

void require_rank_in_range(const DimensionVector& d, int r) {
  if (r < 0 || r > d.min()) {
    throw InvalidInput("rank r=" + std::to_string(r) + " outside 0.." + std::to_string(d.min()));
  }
}

OrbitDescriptor describe_orbit(const KostantPartition& m) {
  return OrbitDescriptor{m, kostant_to_rank(m), orbit_codim(m), m.top()};
}

std::vector<OrbitDescriptor> enumerate_components(const DimensionVector& d, int r, std::uint64_t cap) {
  require_rank_in_range(d, r);
  std::vector<OrbitDescriptor> orbits;
  EnumerationOptions opts;
  opts.cap = cap;
  opts.top_max = r;
  for_each_kostant_partition(d, [&](const KostantPartition& m) { orbits.push_back(describe_orbit(m)); }, opts);

  // Components are the orbits not contained in another orbit's closure, i.e.
  // entrywise-maximal rank patterns. Only a larger entry sum can dominate.
  std::vector<long> sums;
  for (const auto& o : orbits) {
    const auto& e = o.rank.entries();
    sums.push_back(std::accumulate(e.begin(), e.end(), 0L));
  }
  std::vector<OrbitDescriptor> maximal;
  for (std::size_t a = 0; a < orbits.size(); ++a) {
    bool is_max = true;
    for (std::size_t b = 0; b < orbits.size() && is_max; ++b) {
      if (sums[b] > sums[a] && orbits[a].rank.dominated_by(orbits[b].rank)) is_max = false;
    }
    if (is_max) maximal.push_back(orbits[a]);
  }
  return maximal;
}

BruteForceComponents top_components_bruteforce(const DimensionVector& d, int r, std::uint64_t cap, CodimFn codim) {
  require_rank_in_range(d, r);
  BruteForceComponents out;
  out.codim = -1;
  EnumerationOptions opts;
  opts.cap = cap;
  opts.top_min = r;
  opts.top_max = r;
  for_each_kostant_partition(
      d,
      [&](const KostantPartition& m) {
        const std::int64_t c = codim(m);
        if (out.codim < 0 || c < out.codim) {
          out.codim = c;
          out.count = 0;
          out.witnesses.clear();
        }
        if (c == out.codim) {
          ++out.count;
          out.witnesses.push_back(OrbitDescriptor{m, kostant_to_rank(m), c, m.top()});
        }
      },
      opts);
  return out;
}

LaceDiagram greedy_lace_diagram(const KostantPartition& m) {
  if (!m.is_nonnegative()) throw InvalidInput("lace diagram needs a nonnegative Kostant partition");
  const DimensionVector d = m.dimension_vector();
  const int n = m.vertices();
  std::vector<std::pair<int, int>> intervals;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) intervals.emplace_back(i, j);
  }
  std::stable_sort(intervals.begin(), intervals.end(), [](const auto& x, const auto& y) {
    const int lx = x.second - x.first, ly = y.second - y.first;
    if (lx != ly) return lx > ly;
    return x.first < y.first;
  });
  std::vector<int> next_free(static_cast<std::size_t>(n), 0);
  std::vector<Lace> laces;
  for (const auto& [i, j] : intervals) {
    for (int copy = 0; copy < m.at(i, j); ++copy) {
      Lace lace{i, j, {}};
      for (int c = i; c <= j; ++c) lace.dots.push_back(next_free[c]++);
      laces.push_back(std::move(lace));
    }
  }
  return LaceDiagram(d, std::move(laces));
}

LaceDiagram horizontal_lace_diagram(const KostantPartition& m) {
  if (!m.is_nonnegative()) throw InvalidInput("lace diagram needs a nonnegative Kostant partition");
  const DimensionVector d = m.dimension_vector();
  if (!d.is_weakly_increasing()) {
    throw InvalidInput("horizontal lace diagrams need a weakly increasing dimension vector, got " + d.to_string());
  }
  const int n = m.vertices();
  // row_end[row] = last column occupied in that row so far (-1 if none).
  std::vector<int> row_end(static_cast<std::size_t>(d[n - 1]), -1);
  std::vector<Lace> laces;
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) {
      for (int copy = 0; copy < m.at(i, j); ++copy) {
        int row = 0;
        while (row < d[i] && row_end[row] >= i) ++row;
        // Counting argument: enough rows below d_i are free at column i.
        if (row == d[i]) throw InvalidInput("no free row for a horizontal lace");
        row_end[row] = j;
        laces.push_back(Lace{i, j, std::vector<int>(static_cast<std::size_t>(j - i + 1), row)});
      }
    }
  }
  return LaceDiagram(d, std::move(laces));
}

MatrixTuple lace_representative(const KostantPartition& m) { return greedy_lace_diagram(m).representative(); }

namespace {

bool small_integral(const MatrixTuple& t) {
  for (int k = 1; k <= t.dims().arrows(); ++k) {
    const auto& a = t.map(k);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const Rational& v = a(i, j);
        if (v.get_den() != 1 || !mpz_fits_sint_p(v.get_num_mpz_t())) return false;
      }
    }
  }
  return true;
}

// Integer path: products in checked int64, rank by int64 Bareiss with
// arbitrary-precision fallback. Returns false if a product overflows.
bool rank_pattern_int64(const MatrixTuple& t, RankPattern& out) {
  const auto& d = t.dims();
  const int n = static_cast<int>(d.size());
  std::vector<std::vector<std::int64_t>> maps;
  for (int k = 1; k < n; ++k) {
    const auto& a = t.map(k);
    std::vector<std::int64_t> v(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) v[i * a.cols() + j] = a(i, j).get_num().get_si();
    }
    maps.push_back(std::move(v));
  }
  try {
    for (int i = 0; i < n; ++i) {
      out.at(i, i) = d[i];
      // p has shape d_j x d_i.
      std::vector<std::int64_t> p;
      std::size_t cols = static_cast<std::size_t>(d[i]);
      for (int j = i + 1; j < n; ++j) {
        const auto& a = maps[j - 1];
        const std::size_t ar = static_cast<std::size_t>(d[j]), ac = static_cast<std::size_t>(d[j - 1]);
        if (j == i + 1) {
          p = a;
        } else {
          std::vector<std::int64_t> q(ar * cols, 0);
          for (std::size_t x = 0; x < ar; ++x) {
            for (std::size_t y = 0; y < ac; ++y) {
              const std::int64_t axy = a[x * ac + y];
              if (axy == 0) continue;
              for (std::size_t z = 0; z < cols; ++z) {
                q[x * cols + z] = checked_add(q[x * cols + z], checked_mul(axy, p[y * cols + z]));
              }
            }
          }
          p = std::move(q);
        }
        out.at(i, j) = static_cast<int>(bareiss_rank(p, ar, cols));
      }
    }
  } catch (const OverflowError&) {
    return false;
  }
  return true;
}

}  // namespace

RankPattern rank_pattern_of(const MatrixTuple& t) {
  const auto& d = t.dims();
  const int n = static_cast<int>(d.size());
  RankPattern out(n);
  if (small_integral(t) && rank_pattern_int64(t, out)) return out;
  for (int i = 0; i < n; ++i) {
    out.at(i, i) = d[i];
    RationalMatrix p = RationalMatrix::identity(d[i]);
    for (int j = i + 1; j < n; ++j) {
      p = t.map(j) * p;
      out.at(i, j) = static_cast<int>(exact_rank(p));
    }
  }
  return out;
}

}  // namespace quiver
