#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mapenum {

/// Exact rational, always in lowest terms with a positive denominator.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat make_rat(long numerator, long denominator = 1);

/// Accepts "p", "-p" or "p/q"; throws Errc::parse otherwise (including q == 0).
Rat parse_rat(std::string_view text);

/// "3", "-1/6". Canonical, so equal values print identically.
std::string to_string(const Rat& value);

BigInt factorial(int n);
/// n!! with the conventions 0!! = (-1)!! = 1.
BigInt double_factorial(int n);
BigInt binomial(int n, int k);

}  // namespace mapenum
