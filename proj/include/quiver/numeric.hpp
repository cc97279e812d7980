#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace quiver {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. GMP arithmetic requires canonical operands, and
/// the two-argument mpq_class constructor does not reduce.
Rational ratio(const BigInt& num, const BigInt& den);

/// Largest integer not exceeding x.
BigInt floor(const Rational& x);

/// Fractional part {x} = x - floor(x), always in [0, 1).
Rational frac(const Rational& x);

/// Rounding r(x) = floor(x + 1/2); half-integers round up.
BigInt round_half_up(const Rational& x);

BigInt binomial(unsigned long n, unsigned long k);

/// Converts to int64, throwing OverflowError when it does not fit.
std::int64_t to_int64(const BigInt& v);

/// "p/q", or "p" for integers.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Checked int64 arithmetic; throws OverflowError.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace quiver
