#include "cores/poly.hpp"

#include <algorithm>

#include "cores/errors.hpp"

namespace cores {

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  for (long v : coefficients) coeffs_.emplace_back(v);
  normalize();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const BigInt& value) { return IntPoly(std::vector<BigInt>{value}); }

IntPoly IntPoly::monomial(const BigInt& coefficient, int degree) {
  if (degree < 0) throw DomainError("monomial degree must be >= 0");
  std::vector<BigInt> c(degree + 1);
  c[degree] = coefficient;
  return IntPoly(std::move(c));
}

BigInt IntPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

BigInt IntPoly::leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  return divided_exactly(content());
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * other.coeffs_[b];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPoly IntPoly::shifted(int k) const {
  if (k < 0) throw DomainError("shift must be >= 0");
  if (is_zero()) return {};
  std::vector<BigInt> c(k);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::divided_exactly(const BigInt& s) const {
  if (s == 0) throw DomainError("division by zero");
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!mpz_divisible_p(coeffs_[k].get_mpz_t(), s.get_mpz_t())) throw ContractError("inexact scalar division");
    mpz_divexact(out[k].get_mpz_t(), coeffs_[k].get_mpz_t(), s.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

BigInt IntPoly::evaluate(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string IntPoly::to_list() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ", ";
    out += cores::to_string(coeffs_[k]);
  }
  return out + "]";
}

std::string IntPoly::to_expression(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0) {
      out += cores::to_string(magnitude);
    } else if (magnitude == 1) {
      out += power;
    } else {
      out += cores::to_string(magnitude) + "*" + power;
    }
  }
  return out;
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw ContractError("polynomial division is not exact");
  std::vector<BigInt> rem = a.coefficients();
  std::vector<BigInt> quot(a.degree() - b.degree() + 1);
  const BigInt& lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    BigInt& top = rem[k + b.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) throw ContractError("polynomial division is not exact");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.coefficients()[j];
    quot[k] = std::move(q);
  }
  for (const auto& r : rem) {
    if (r != 0) throw ContractError("polynomial division is not exact");
  }
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> rem = a.coefficients();
  const BigInt& lead = b.leading();
  const int db = b.degree();
  // One multiplication by lc(b) per step, deg a - deg b + 1 steps in all.
  for (int top = a.degree(); top >= db; --top) {
    const BigInt q = rem[top];
    for (auto& r : rem) r *= lead;
    for (int j = 0; j <= db; ++j) rem[top - db + j] -= q * b.coefficients()[j];
  }
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  BigInt content_gcd = 0;
  mpz_gcd(content_gcd.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_remainder(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return {};
  if (u.leading() < 0) u = -u;
  return u * content_gcd;
}

}  // namespace cores
