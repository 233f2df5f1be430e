#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients.

#include <string>
#include <vector>

#include "cores/bigint.hpp"

namespace cores {

class IntPoly {
 public:
  IntPoly() = default;
  // Ascending coefficients; trailing zeros are stripped.
  explicit IntPoly(std::vector<BigInt> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly constant(const BigInt& value);
  static IntPoly monomial(const BigInt& coefficient, int degree);
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int k) const;
  BigInt leading() const;

  // Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  BigInt content() const;
  // Divided by the content, sign unchanged.
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }

  // Multiplication by x^k.
  IntPoly shifted(int k) const;

  // Divides every coefficient by s; throws ContractError if any division is inexact.
  IntPoly divided_exactly(const BigInt& s) const;

  BigInt evaluate(const BigInt& at) const;

  // "[1, 1, 2]"
  std::string to_list() const;
  // Descending expression, e.g. "2*x^2 + x + 1"; "0" for zero.
  std::string to_expression(const std::string& var = "x") const;

  bool operator==(const IntPoly&) const = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// a / b when b divides a in Z[x]; ContractError otherwise.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Greatest common divisor in Z[x], leading coefficient positive; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace cores
