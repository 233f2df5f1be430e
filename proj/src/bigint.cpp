#include "cores/bigint.hpp"

#include "cores/errors.hpp"

namespace cores {

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt from_u64(std::uint64_t value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return out;
}

BigInt parse_bigint(const std::string& text) {
  BigInt out;
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw DomainError("not an integer: '" + text + "'");
  for (std::size_t k = start; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') throw DomainError("not an integer: '" + text + "'");
  }
  if (out.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) {
    throw DomainError("not an integer: '" + text + "'");
  }
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt catalan(unsigned long m) {
  BigInt out = binomial(2 * m, m);
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), m + 1);
  return out;
}

BigInt fibonacci(unsigned long m) {
  BigInt out;
  mpz_fib_ui(out.get_mpz_t(), m);
  return out;
}

}  // namespace cores
