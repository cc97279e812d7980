#pragma once

// Exact kernel dimension of a sparse integer matrix. Elimination runs modulo
// word-size primes; a nonzero kernel is certified by lifting the modular
// kernel basis to rationals and checking every vector exactly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quiver/numeric.hpp"

namespace quiver {

/// (row, value) pairs with distinct rows.
using SparseIntColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

struct CertifiedKernel {
  /// dim ker over Q.
  std::size_t dimension = 0;
  /// Primitive integer vectors spanning the kernel, one per free column.
  std::vector<std::vector<BigInt>> basis;
  /// Number of primes whose elimination was used.
  int primes_used = 0;
};

/// Kernel of the rows x cols matrix whose columns are given. Throws
/// ResourceLimit if no certificate is found with the built-in primes.
CertifiedKernel certified_kernel(const std::vector<SparseIntColumn>& columns, std::size_t rows);

/// Rank modulo the prime with the given index in the built-in list.
std::size_t rank_mod_prime(const std::vector<SparseIntColumn>& columns, std::size_t rows, std::size_t prime_index);

std::size_t builtin_prime_count();
std::uint32_t builtin_prime(std::size_t index);

/// n/d with |n|, d <= sqrt(modulus/2) and n = a d mod modulus, if one exists.
std::optional<Rational> rational_reconstruct(const BigInt& a, const BigInt& modulus);

}  // namespace quiver
