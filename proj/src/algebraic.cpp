#include "cores/algebraic.hpp"

#include <algorithm>

#include "cores/errors.hpp"

namespace cores {

AlgebraicEquation::AlgebraicEquation(std::vector<std::vector<BigInt>> coefficients) {
  int dx = -1, dy = -1;
  BigInt content = 0;
  int top_i = -1, top_j = -1;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    for (std::size_t j = 0; j < coefficients[i].size(); ++j) {
      const BigInt& c = coefficients[i][j];
      if (c == 0) continue;
      dx = std::max(dx, static_cast<int>(i));
      dy = std::max(dy, static_cast<int>(j));
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      if (std::pair(static_cast<int>(j), static_cast<int>(i)) > std::pair(top_j, top_i)) {
        top_i = static_cast<int>(i);
        top_j = static_cast<int>(j);
      }
    }
  }
  if (dx < 0) throw DomainError("the zero polynomial is not an equation");
  if (coefficients[top_i][top_j] < 0) content = -content;
  coeffs_.assign(dx + 1, std::vector<BigInt>(dy + 1));
  for (int i = 0; i <= dx; ++i) {
    for (int j = 0; j <= dy && j < static_cast<int>(coefficients[i].size()); ++j) {
      mpz_divexact(coeffs_[i][j].get_mpz_t(), coefficients[i][j].get_mpz_t(), content.get_mpz_t());
    }
  }
}

AlgebraicEquation AlgebraicEquation::from_rational(const RatFunc& f) {
  const auto& num = f.numerator();
  const auto& den = f.denominator();
  const int dx = std::max(num.degree(), den.degree());
  std::vector<std::vector<BigInt>> c(dx + 1, std::vector<BigInt>(2));
  for (int i = 0; i <= dx; ++i) {
    c[i][0] = -num.coefficient(i);
    c[i][1] = den.coefficient(i);
  }
  return AlgebraicEquation(std::move(c));
}

BigInt AlgebraicEquation::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i > degree_x() || j > degree_y()) return 0;
  return coeffs_[i][j];
}

IntPoly AlgebraicEquation::y_coefficient(int j) const {
  std::vector<BigInt> c;
  for (int i = 0; i <= degree_x(); ++i) c.push_back(coefficient(i, j));
  return IntPoly(std::move(c));
}

std::string AlgebraicEquation::to_string() const {
  std::string out;
  for (int j = degree_y(); j >= 0; --j) {
    IntPoly p = y_coefficient(j);
    if (p.is_zero()) continue;
    const std::string ypow = j == 0 ? "" : (j == 1 ? "Y" : "Y^" + std::to_string(j));
    const bool single = std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                      [](const BigInt& c) { return c != 0; }) == 1;
    bool negative = false;
    std::string body;
    if (single) {
      negative = p.leading() < 0;
      body = (negative ? -p : p).to_expression();
      if (!ypow.empty()) body = body == "1" ? ypow : body + "*" + ypow;
    } else {
      body = "(" + p.to_expression() + ")" + (ypow.empty() ? "" : "*" + ypow);
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  return out;
}

PowerSeries algebraic_residual(const AlgebraicEquation& eq, const PowerSeries& u) {
  if (u.order() < 1) throw DomainError("residual needs a series of order >= 1");
  const int order = u.order();
  std::vector<Rational> zero;
  PowerSeries total(zero, order);
  PowerSeries power = PowerSeries::one(order);
  for (int j = 0; j <= eq.degree_y(); ++j) {
    if (j > 0) power = power * u;
    std::vector<Rational> poly;
    for (int i = 0; i <= eq.degree_x(); ++i) poly.emplace_back(eq.coefficient(i, j));
    total = total + PowerSeries(std::move(poly), order) * power;
  }
  return total;
}

}  // namespace cores
