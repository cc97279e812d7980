#include "quiver/modular.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "quiver/errors.hpp"

namespace quiver {

namespace {

constexpr std::array<std::uint32_t, 8> kPrimes = {2147483647u, 2147483629u, 2147483587u, 2147483579u,
                                                  2147483563u, 2147483549u, 2147483543u, 2147483497u};

struct ModularKernel {
  std::size_t rank = 0;
  std::vector<std::size_t> free_columns;
  /// One vector per free column, entries in [0, p).
  std::vector<std::vector<std::uint32_t>> basis;
};

template <std::uint32_t P>
std::uint32_t reduce(std::int64_t v) {
  std::int64_t r = v % static_cast<std::int64_t>(P);
  return static_cast<std::uint32_t>(r < 0 ? r + P : r);
}

template <std::uint32_t P>
std::uint32_t inverse(std::uint32_t a) {
  std::uint64_t result = 1, base = a, e = P - 2;
  while (e) {
    if (e & 1) result = result * base % P;
    base = base * base % P;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

template <std::uint32_t P>
ModularKernel eliminate(const std::vector<SparseIntColumn>& columns, std::size_t rows, bool want_basis) {
  const std::size_t cols = columns.size();
  std::vector<std::uint32_t> a(rows * cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [i, v] : columns[j]) a[i * cols + j] = reduce<P>(v);
  }
  ModularKernel out;
  std::vector<std::size_t> pivot_col;
  std::vector<std::size_t> nz;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols && rank < rows; ++j) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + j] == 0) ++piv;
    if (piv == rows) continue;
    std::uint32_t* prow = &a[rank * cols];
    if (piv != rank) std::swap_ranges(prow, prow + cols, &a[piv * cols]);
    const std::uint64_t inv = inverse<P>(prow[j]);
    nz.clear();
    for (std::size_t c = j; c < cols; ++c) {
      if (prow[c] != 0) {
        prow[c] = static_cast<std::uint32_t>(prow[c] * inv % P);
        if (c > j) nz.push_back(c);
      }
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint32_t* row = &a[i * cols];
      const std::uint32_t f = row[j];
      if (f == 0) continue;
      const std::uint64_t g = P - f;
      row[j] = 0;
      for (std::size_t c : nz) row[c] = static_cast<std::uint32_t>((row[c] + g * prow[c]) % P);
    }
    pivot_col.push_back(j);
    ++rank;
  }
  out.free_columns.clear();
  for (std::size_t j = 0, k = 0; j < cols; ++j) {
    if (k < pivot_col.size() && pivot_col[k] == j) {
      ++k;
    } else {
      out.free_columns.push_back(j);
    }
  }
  out.rank = rank;
  if (!want_basis) return out;

  for (std::size_t f : out.free_columns) {
    std::vector<std::uint32_t> x(cols, 0);
    x[f] = 1;
    // Pivot rows are normalized, so back substitution needs no division.
    for (std::size_t k = rank; k-- > 0;) {
      const std::uint32_t* row = &a[k * cols];
      std::uint64_t acc = 0;
      for (std::size_t c = pivot_col[k] + 1; c < cols; ++c) {
        if (row[c] != 0 && x[c] != 0) acc = (acc + static_cast<std::uint64_t>(row[c]) * x[c]) % P;
      }
      x[pivot_col[k]] = static_cast<std::uint32_t>((P - acc) % P);
    }
    out.basis.push_back(std::move(x));
  }
  return out;
}

ModularKernel eliminate_with(std::size_t index, const std::vector<SparseIntColumn>& columns, std::size_t rows,
                             bool want_basis) {
  switch (index) {
    case 0: return eliminate<kPrimes[0]>(columns, rows, want_basis);
    case 1: return eliminate<kPrimes[1]>(columns, rows, want_basis);
    case 2: return eliminate<kPrimes[2]>(columns, rows, want_basis);
    case 3: return eliminate<kPrimes[3]>(columns, rows, want_basis);
    case 4: return eliminate<kPrimes[4]>(columns, rows, want_basis);
    case 5: return eliminate<kPrimes[5]>(columns, rows, want_basis);
    case 6: return eliminate<kPrimes[6]>(columns, rows, want_basis);
    case 7: return eliminate<kPrimes[7]>(columns, rows, want_basis);
  }
  throw std::out_of_range("prime index out of range");
}

// Clears denominators and divides by the content.
std::vector<BigInt> primitive(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& x : v) {
    out.push_back(x.get_num() * (l / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

bool in_kernel(const std::vector<SparseIntColumn>& columns, std::size_t rows, const std::vector<BigInt>& v) {
  std::vector<BigInt> acc(rows, 0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (v[j] == 0) continue;
    for (const auto& [i, c] : columns[j]) acc[i] += v[j] * BigInt(static_cast<long>(c));
  }
  return std::all_of(acc.begin(), acc.end(), [](const BigInt& x) { return x == 0; });
}

}  // namespace

std::size_t builtin_prime_count() { return kPrimes.size(); }

std::uint32_t builtin_prime(std::size_t index) { return kPrimes.at(index); }

std::optional<Rational> rational_reconstruct(const BigInt& a, const BigInt& modulus) {
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), BigInt(modulus / 2).get_mpz_t());
  BigInt r0 = modulus, r1 = a % modulus, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += modulus;
  while (r1 > bound) {
    const BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return ratio(r1, t1);
}

std::size_t rank_mod_prime(const std::vector<SparseIntColumn>& columns, std::size_t rows, std::size_t prime_index) {
  return eliminate_with(prime_index, columns, rows, false).rank;
}

CertifiedKernel certified_kernel(const std::vector<SparseIntColumn>& columns, std::size_t rows) {
  for (const auto& col : columns) {
    for (const auto& [i, v] : col) {
      if (i >= rows) throw std::out_of_range("column entry beyond the row count");
    }
  }
  CertifiedKernel out;
  // Residues of the kernel basis for the primes agreeing with the best rank.
  std::optional<ModularKernel> best;
  BigInt modulus = 1;
  std::vector<std::vector<BigInt>> lifted;
  for (std::size_t pi = 0; pi < kPrimes.size(); ++pi) {
    auto mk = eliminate_with(pi, columns, rows, true);
    ++out.primes_used;
    // rank mod p never exceeds the rational rank, so full rank settles it.
    if (mk.free_columns.empty()) return out;
    if (best && (mk.rank < best->rank || (mk.rank == best->rank && mk.free_columns != best->free_columns))) continue;
    const BigInt p(static_cast<unsigned long>(kPrimes[pi]));
    if (!best || mk.rank > best->rank) {
      best = mk;
      modulus = p;
      lifted.assign(mk.basis.size(), std::vector<BigInt>(columns.size()));
      for (std::size_t b = 0; b < mk.basis.size(); ++b) {
        for (std::size_t j = 0; j < columns.size(); ++j) lifted[b][j] = static_cast<unsigned long>(mk.basis[b][j]);
      }
    } else {
      // Chinese remaindering of each entry with the new residue.
      BigInt inv;
      const BigInt mod_p = modulus % p;
      mpz_invert(inv.get_mpz_t(), mod_p.get_mpz_t(), p.get_mpz_t());
      for (std::size_t b = 0; b < mk.basis.size(); ++b) {
        for (std::size_t j = 0; j < columns.size(); ++j) {
          BigInt& x = lifted[b][j];
          BigInt t = (BigInt(static_cast<unsigned long>(mk.basis[b][j])) - x) % p;
          if (t < 0) t += p;
          t = t * inv % p;
          x += modulus * t;
        }
      }
      modulus *= p;
    }

    std::vector<std::vector<BigInt>> candidates;
    bool ok = true;
    for (std::size_t b = 0; b < lifted.size() && ok; ++b) {
      std::vector<Rational> v;
      for (const auto& x : lifted[b]) {
        auto q = rational_reconstruct(x, modulus);
        if (!q) {
          ok = false;
          break;
        }
        v.push_back(*q);
      }
      if (!ok) break;
      auto w = primitive(v);
      if (!in_kernel(columns, rows, w)) ok = false;
      candidates.push_back(std::move(w));
    }
    if (ok) {
      // Verified vectors are independent (distinct free-column supports), and
      // their count matches the modular upper bound.
      out.dimension = candidates.size();
      out.basis = std::move(candidates);
      return out;
    }
  }
  throw ResourceLimit("could not certify the kernel with " + std::to_string(kPrimes.size()) + " primes");
}

}  // namespace quiver
