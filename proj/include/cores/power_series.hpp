#pragma once

// Truncated power series over Q. A series of order N knows coefficients
// 0..N-1 exactly; results never claim more precision than their inputs.

#include <vector>

#include "cores/bigint.hpp"
#include "cores/ratfunc.hpp"

namespace cores {

class PowerSeries {
 public:
  PowerSeries() = default;
  // Coefficients beyond `order` are dropped, missing ones are zero.
  PowerSeries(std::vector<Rational> coefficients, int order);

  static PowerSeries from_integers(const std::vector<BigInt>& terms);
  // The constant 1 known to the given order.
  static PowerSeries one(int order);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  // True iff every known coefficient is zero.
  bool is_zero() const;

  PowerSeries truncated(int order) const;
  // Multiplication by x^k, which also raises the known order by k.
  PowerSeries shifted(int k) const;
  PowerSeries pow(int exponent) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, const PowerSeries& a);

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<Rational> coeffs_;
  int order_ = 0;
};

// Taylor coefficients 0..order-1. Throws DomainError if den(0) = 0.
PowerSeries series_expand(const RatFunc& f, int order);

// The integer coefficients of f, throwing ContractError if one is not integral.
std::vector<BigInt> integer_coefficients(const PowerSeries& s);

}  // namespace cores
