#pragma once

// Combinatorics of representations of the equioriented type-A quiver
// 0 -> 1 -> ... -> N: dimension vectors, Kostant partitions (interval
// multiplicities m_ij), rank patterns (ranks r_ij of partial products),
// lace diagrams and their partial-permutation representatives.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quiver/exact_linalg.hpp"
#include "quiver/numeric.hpp"

namespace quiver {

inline constexpr std::uint64_t kDefaultEnumerationCap = 20'000'000;

/// Widths (d_0, ..., d_N) of the vector spaces at the quiver vertices.
class DimensionVector {
 public:
  /// Requires at least two entries (N >= 1), all nonnegative.
  explicit DimensionVector(std::vector<int> entries);

  std::size_t size() const { return entries_.size(); }
  int arrows() const { return static_cast<int>(entries_.size()) - 1; }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  int min() const;
  int sum() const;
  bool is_weakly_increasing() const;

  /// Weakly increasing rearrangement d'.
  DimensionVector sorted() const;
  /// Stable permutation p with sorted()[k] = (*this)[p[k]].
  std::vector<std::size_t> sorting_permutation() const;
  /// Adds delta to every entry; throws if an entry would become negative.
  DimensionVector shifted(int delta) const;

  std::string to_string() const;

  friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;

 private:
  std::vector<int> entries_;
};

/// Upper-triangular array indexed by 0 <= i <= j <= N, stored row-major.
class TriangularArray {
 public:
  TriangularArray() = default;
  explicit TriangularArray(int vertices);

  int vertices() const { return n_; }
  int arrows() const { return n_ - 1; }

  int& at(int i, int j) { return data_[index(i, j)]; }
  int at(int i, int j) const { return data_[index(i, j)]; }
  /// Zero outside the index range (i < 0 or j > N), as the inversion formula expects.
  int get_or_zero(int i, int j) const;

  const std::vector<int>& entries() const { return data_; }
  std::vector<std::vector<int>> rows() const;

  friend auto operator<=>(const TriangularArray&, const TriangularArray&) = default;

 protected:
  std::size_t index(int i, int j) const;

  int n_ = 0;
  std::vector<int> data_;
};

/// Multiplicities m_ij of the interval modules M_ij. Entries may be negative
/// when produced by rank_to_kostant; is_nonnegative() decides membership in M+_d.
class KostantPartition : public TriangularArray {
 public:
  using TriangularArray::TriangularArray;

  /// Row i lists m_ii, ..., m_iN.
  static KostantPartition from_rows(const std::vector<std::vector<int>>& rows);

  bool is_nonnegative() const;
  /// d_k = sum of m_ij over intervals [i, j] containing k.
  DimensionVector dimension_vector() const;
  int top() const { return at(0, arrows()); }

  std::string to_string() const;
};

/// Ranks r_ij of the partial products A_j ... A_{i+1}; r_ii = d_i.
class RankPattern : public TriangularArray {
 public:
  using TriangularArray::TriangularArray;

  static RankPattern from_rows(const std::vector<std::vector<int>>& rows);

  DimensionVector dimension_vector() const;
  int top() const { return at(0, arrows()); }
  /// Entrywise partial order of the orbit closure poset.
  bool dominated_by(const RankPattern& other) const;
};

/// A_1, ..., A_N with A_i of shape d_i x d_{i-1}.
class MatrixTuple {
 public:
  MatrixTuple(DimensionVector dims, std::vector<RationalMatrix> maps);
  static MatrixTuple zero(const DimensionVector& dims);

  const DimensionVector& dims() const { return dims_; }
  /// A_k for k in 1..N.
  const RationalMatrix& map(int k) const { return maps_[static_cast<std::size_t>(k - 1)]; }
  RationalMatrix& map(int k) { return maps_[static_cast<std::size_t>(k - 1)]; }

  /// A_j ... A_{i+1}, for i < j; the identity of size d_i when i == j.
  RationalMatrix product(int i, int j) const;
  /// Full product A_N ... A_1.
  RationalMatrix mult() const { return product(0, dims_.arrows()); }

 private:
  DimensionVector dims_;
  std::vector<RationalMatrix> maps_;
};

struct Lace {
  int start = 0;
  int end = 0;
  /// dots[k] is the row of this lace in column start + k.
  std::vector<int> dots;
};

class LaceDiagram {
 public:
  /// Validates that every dot exists and is used by at most one lace.
  LaceDiagram(DimensionVector dims, std::vector<Lace> laces);

  const DimensionVector& dims() const { return dims_; }
  const std::vector<Lace>& laces() const { return laces_; }

  KostantPartition kostant() const;
  bool is_horizontal() const;
  /// The 0/1 partial permutation matrices A_*(L).
  MatrixTuple representative() const;

 private:
  DimensionVector dims_;
  std::vector<Lace> laces_;
};

struct OrbitDescriptor {
  KostantPartition kostant;
  RankPattern rank;
  std::int64_t codim = 0;
  int top_rank = 0;
};

OrbitDescriptor describe_orbit(const KostantPartition& m);

using CodimFn = std::int64_t (*)(const KostantPartition&);

std::int64_t rep_dim(const DimensionVector& d);

struct EnumerationOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  /// Inclusive bounds on m_0N.
  int top_min = 0;
  std::optional<int> top_max;
};

/// Visits every Kostant partition of d in lexicographic row-major order.
/// Throws ResourceLimit once more than opts.cap partitions were produced.
void for_each_kostant_partition(const DimensionVector& d, const std::function<void(const KostantPartition&)>& visit,
                                const EnumerationOptions& opts = {});

std::vector<KostantPartition> enumerate_kostant_partitions(const DimensionVector& d,
                                                           std::uint64_t cap = kDefaultEnumerationCap);

/// |M+_d|, or the number with m_0N == top when given. Memoized over rows,
/// so it stays cheap where enumeration would not.
BigInt count_kostant_partitions(const DimensionVector& d, std::optional<int> top = std::nullopt);
/// min(count, limit), stopping early once the limit is reached.
BigInt count_kostant_partitions_saturating(const DimensionVector& d, std::optional<int> top, const BigInt& limit);

RankPattern kostant_to_rank(const KostantPartition& m);
KostantPartition rank_to_kostant(const RankPattern& r);
bool is_orbit_rank_pattern(const RankPattern& r);

/// sum over 1 <= i <= u <= j <= v <= N of m_{i-1,j-1} m_{uv}. Throws
/// OverflowError if the value does not fit in int64.
std::int64_t orbit_codim(const KostantPartition& m);
/// Same value; falls back to arbitrary precision when int64 overflows.
BigInt orbit_codim_exact(const KostantPartition& m);

/// Adds p longest intervals [0, N]; the orbit codimension is unchanged.
KostantPartition longest_root_shift(const KostantPartition& m, int p);

/// Throws InvalidInput unless 0 <= r <= min(d).
void require_rank_in_range(const DimensionVector& d, int r);

/// Entrywise-maximal orbit rank patterns with r_0N <= r, i.e. the
/// irreducible components of the closure of Sigma^r_d, in canonical order.
std::vector<OrbitDescriptor> enumerate_components(const DimensionVector& d, int r,
                                                  std::uint64_t cap = kDefaultEnumerationCap);

struct BruteForceComponents {
  std::int64_t codim = 0;
  std::int64_t count = 0;
  std::vector<OrbitDescriptor> witnesses;
};

/// Minimum orbit codimension over m_0N == r and the number of orbits attaining it.
BruteForceComponents top_components_bruteforce(const DimensionVector& d, int r,
                                               std::uint64_t cap = kDefaultEnumerationCap,
                                               CodimFn codim = &orbit_codim);

/// Greedy lace diagram: intervals by decreasing length (ties by left
/// endpoint), each copy taking the first free dot in every column.
LaceDiagram greedy_lace_diagram(const KostantPartition& m);

/// Lace diagram with every lace in a single row; requires weakly increasing d.
LaceDiagram horizontal_lace_diagram(const KostantPartition& m);

MatrixTuple lace_representative(const KostantPartition& m);

/// Exact ranks of all partial products.
RankPattern rank_pattern_of(const MatrixTuple& t);

}  // namespace quiver
