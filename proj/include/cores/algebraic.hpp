#pragma once

// Bivariate integer polynomials P(x, Y) = sum c_ij x^i Y^j read as equations
// P(x, Y(x)) = 0 for a generating function Y.

#include <string>
#include <vector>

#include "cores/bigint.hpp"
#include "cores/power_series.hpp"
#include "cores/ratfunc.hpp"

namespace cores {

class AlgebraicEquation {
 public:
  // coefficients[i][j] is c_ij. Normalizes to content 1 with the nonzero
  // coefficient of largest (j, i) positive. Throws DomainError if all are zero.
  explicit AlgebraicEquation(std::vector<std::vector<BigInt>> coefficients);

  // den * Y - num.
  static AlgebraicEquation from_rational(const RatFunc& f);

  int degree_x() const { return static_cast<int>(coeffs_.size()) - 1; }
  int degree_y() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_[0].size()) - 1; }
  BigInt coefficient(int i, int j) const;
  const std::vector<std::vector<BigInt>>& grid() const { return coeffs_; }

  // The coefficient of Y^j as a polynomial in x.
  IntPoly y_coefficient(int j) const;

  // e.g. "x*Y^3 - 2*Y^2 + 3*Y - 1", highest power of Y first.
  std::string to_string() const;

  bool operator==(const AlgebraicEquation&) const = default;

 private:
  std::vector<std::vector<BigInt>> coeffs_;  // trimmed to the true degrees
};

// sum c_ij x^i u^j, truncated to the order of u. Needs u.order() >= 1.
PowerSeries algebraic_residual(const AlgebraicEquation& eq, const PowerSeries& u);

}  // namespace cores
