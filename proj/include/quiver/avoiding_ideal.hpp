#pragma once

// Graded pieces of the kernel of phi_r: H_d -> Z[y_1..y_{r+1}, x_ij (j > r+1)],
// where H_d is generated by the elementary symmetric polynomials of each
// vertex's variables and phi_r sends x_ij to y_j for j <= r+1.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quiver/numeric.hpp"
#include "quiver/quiver_core.hpp"

namespace quiver {

inline constexpr std::uint64_t kDefaultBasisCap = 20'000;

/// e_k of the variables x_{vertex,1..d_vertex}; degree k.
struct Generator {
  int vertex = 0;
  int k = 0;
};

/// Exponents over GradedBasis::generators() -> coefficient.
using HPolynomial = std::map<std::vector<int>, BigInt>;
/// Exponents over the raw target variables -> coefficient.
using RawPolynomial = std::map<std::vector<int>, BigInt>;

/// Monomials of weighted degree n in the generators, lexicographically
/// increasing by exponent vector.
class GradedBasis {
 public:
  GradedBasis(const DimensionVector& d, int degree, std::uint64_t cap = kDefaultBasisCap);

  static std::vector<Generator> generators_of(const DimensionVector& d);

  int degree() const { return degree_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<std::vector<int>>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }

  /// e.g. "a1^2*b2"; vertex 0 is a, vertex 1 is b, ...
  std::string render(std::size_t index) const;
  /// Integer combination of basis monomials, e.g. "a1*b1 - 2*a2".
  std::string render(const std::vector<BigInt>& coeffs) const;

 private:
  int degree_;
  std::vector<Generator> generators_;
  std::vector<std::vector<int>> monomials_;
};

/// The substitution on raw variables y_1..y_{r+1}, then x_ij with j > r+1
/// in vertex-major order.
class PhiMap {
 public:
  PhiMap(const DimensionVector& d, int r);

  const std::vector<std::string>& target_variables() const { return names_; }
  const std::vector<Generator>& generators() const { return generators_; }

  RawPolynomial image_of_generator(std::size_t g) const { return images_[g]; }
  RawPolynomial image_of_monomial(const std::vector<int>& exponents) const;
  RawPolynomial apply(const HPolynomial& p) const;

 private:
  std::vector<Generator> generators_;
  std::vector<std::string> names_;
  std::vector<RawPolynomial> images_;
};

/// All monomials of total degree n in a fixed number of variables.
class TargetBasis {
 public:
  TargetBasis(std::size_t variables, int degree, std::uint64_t cap = kDefaultBasisCap);

  std::size_t size() const { return monomials_.size(); }
  const std::vector<std::vector<int>>& monomials() const { return monomials_; }
  /// Throws InvalidInput for a monomial outside the basis.
  std::size_t index_of(const std::vector<int>& exponents) const;

 private:
  std::vector<std::vector<int>> monomials_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// Coefficients of phi_r(element) in TargetBasis(raw variables, n). Throws
/// InvalidInput unless element is homogeneous of degree n.
std::vector<BigInt> apply_phi(const DimensionVector& d, int r, const HPolynomial& element, int degree,
                              std::uint64_t cap = kDefaultBasisCap);

struct GradedKernelResult {
  int degree = 0;
  std::size_t source_dim = 0;
  /// Rows of the assembled matrix that carry a nonzero entry.
  std::size_t target_dim = 0;
  std::size_t kernel_rank = 0;
  /// Primitive integer vectors over the GradedBasis monomials.
  std::vector<std::vector<BigInt>> kernel_basis;
};

/// dim of the degree-n part of ker(phi_r). For r < min d the map is
/// assembled in the symmetric functions of y and of each vertex's remaining
/// x's, a coordinate change that is injective on the image; otherwise in
/// raw monomials.
GradedKernelResult kernel_rank_at_degree(const DimensionVector& d, int r, int degree,
                                         std::uint64_t cap = kDefaultBasisCap);

struct LowestKernel {
  int degree = 0;
  BigInt rank;
  /// r = min d: Sigma^r_d is dense, phi_r is not defined on a proper
  /// complement, and (C, theta) = (0, 1).
  bool degenerate = false;
  GradedKernelResult piece;
};

/// First n in 1..n_max with a nonzero kernel. Throws NotFound otherwise.
LowestKernel lowest_kernel(const DimensionVector& d, int r, int n_max, std::uint64_t cap = kDefaultBasisCap);

}  // namespace quiver
