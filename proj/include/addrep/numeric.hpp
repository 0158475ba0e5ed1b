#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace addrep {

// Counts overflow 64 bits already for modest inputs (the number of ways to
// write n as a sum of theta squares grows like n^{theta/2-1}), so every
// count in the library is arbitrary precision.
using BigInt = mpz_class;
using Count = BigInt;        // nonnegative by contract
using SignedCount = BigInt;  // intermediate alternating sums may be negative
using Rational = mpq_class;  // always kept in canonical form

BigInt factorial(std::uint64_t k);

// base^exponent with 0^0 == 1.
BigInt int_pow(const BigInt& base, std::uint64_t exponent);

// Canonicalized rational; throws InputError on zero denominator.
Rational make_rational(const BigInt& numerator, const BigInt& denominator);

// Conversion helper for using big values as table sizes / indexes.
// Throws InputError when the value does not fit.
std::int64_t to_int64(const BigInt& value, const char* what);

std::string rational_str(const Rational& q);
double rational_double(const Rational& q);

}  // namespace addrep
