#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cores {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }
std::string to_string(const Rational& value);

BigInt from_u64(std::uint64_t value);
BigInt parse_bigint(const std::string& text);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

// Catalan(m) = binom(2m, m) / (m + 1).
BigInt catalan(unsigned long m);

// Fibonacci with F_0 = 0, F_1 = 1.
BigInt fibonacci(unsigned long m);

}  // namespace cores
