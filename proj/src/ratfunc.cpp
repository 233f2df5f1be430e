#include "cores/ratfunc.hpp"

#include "cores/errors.hpp"

namespace cores {

RatFunc::RatFunc(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = {};
    den_ = IntPoly::constant(1);
    return;
  }
  const IntPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  BigInt c = 0;
  mpz_gcd(c.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
  if (den.leading() < 0) c = -c;
  num_ = num.divided_exactly(c);
  den_ = den.divided_exactly(c);
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_ == IntPoly::constant(1)) return num_.to_expression(var);
  return "(" + num_.to_expression(var) + ")/(" + den_.to_expression(var) + ")";
}

RatFunc ratfunc_normalize(const IntPoly& num, const IntPoly& den) { return RatFunc(num, den); }

}  // namespace cores
