#pragma once

#include <string>

#include "cores/poly.hpp"

namespace cores {

// num/den in lowest terms: gcd(num, den) = 1, the coefficients of num and den
// together have content 1, and den has a positive leading coefficient.
class RatFunc {
 public:
  RatFunc() : num_(), den_(IntPoly::constant(1)) {}
  RatFunc(const IntPoly& p) : RatFunc(p, IntPoly::constant(1)) {}  // NOLINT: polynomials embed
  // Throws DomainError if den is zero.
  RatFunc(IntPoly num, IntPoly den);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  // Throws DomainError on division by zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  // "(num)/(den)" with descending expressions, or just the numerator if den = 1.
  std::string to_string(const std::string& var = "x") const;

  bool operator==(const RatFunc&) const = default;

 private:
  IntPoly num_;
  IntPoly den_;
};

RatFunc ratfunc_normalize(const IntPoly& num, const IntPoly& den);

}  // namespace cores
