#include "cores/power_series.hpp"

#include <algorithm>

#include "cores/errors.hpp"

namespace cores {

PowerSeries::PowerSeries(std::vector<Rational> coefficients, int order) : coeffs_(std::move(coefficients)), order_(order) {
  if (order < 0) throw DomainError("series order must be >= 0");
  coeffs_.resize(order);
}

PowerSeries PowerSeries::from_integers(const std::vector<BigInt>& terms) {
  std::vector<Rational> c;
  c.reserve(terms.size());
  for (const auto& t : terms) c.emplace_back(t);
  return PowerSeries(std::move(c), static_cast<int>(terms.size()));
}

PowerSeries PowerSeries::one(int order) {
  std::vector<Rational> c;
  if (order > 0) c.emplace_back(1);
  return PowerSeries(std::move(c), order);
}

Rational PowerSeries::coefficient(int k) const {
  if (k < 0 || k >= order_) throw DomainError("coefficient beyond the known order");
  return coeffs_[k];
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > order_) throw DomainError("cannot extend a truncated series");
  return PowerSeries(coeffs_, order);
}

PowerSeries PowerSeries::shifted(int k) const {
  if (k < 0) throw DomainError("shift must be >= 0");
  std::vector<Rational> c(k);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return PowerSeries(std::move(c), order_ + k);
}

PowerSeries PowerSeries::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative exponent");
  PowerSeries result = one(order_);
  for (int e = 0; e < exponent; ++e) result = result * *this;
  return result;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out = *this;
  for (auto& q : out.coeffs_) q = -q;
  return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order_, b.order_);
  std::vector<Rational> c(order);
  for (int k = 0; k < order; ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
  return PowerSeries(std::move(c), order);
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order_, b.order_);
  std::vector<Rational> c(order);
  for (int i = 0; i < order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j < order; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PowerSeries(std::move(c), order);
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
  PowerSeries out = a;
  for (auto& q : out.coeffs_) q *= s;
  return out;
}

PowerSeries series_expand(const RatFunc& f, int order) {
  if (order < 0) throw DomainError("series order must be >= 0");
  const auto& num = f.numerator();
  const auto& den = f.denominator();
  if (den.coefficient(0) == 0) throw DomainError("denominator vanishes at x = 0; no power series expansion");
  const Rational d0(den.coefficient(0));
  std::vector<Rational> c(order);
  for (int k = 0; k < order; ++k) {
    Rational acc(num.coefficient(k));
    for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= Rational(den.coefficient(j)) * c[k - j];
    c[k] = acc / d0;
  }
  return PowerSeries(std::move(c), order);
}

std::vector<BigInt> integer_coefficients(const PowerSeries& s) {
  std::vector<BigInt> out;
  for (const auto& q : s.coefficients()) {
    if (q.get_den() != 1) throw ContractError("series coefficient " + to_string(q) + " is not an integer");
    out.push_back(q.get_num());
  }
  return out;
}

}  // namespace cores
