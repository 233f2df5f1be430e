#include "cores/linear_system.hpp"

#include <string>

namespace cores {
namespace {

IntPoly lcm(const IntPoly& a, const IntPoly& b) { return exact_quotient(a * b, gcd(a, b)); }

void validate(const LinearSystem& system) {
  const std::size_t cols = system.unknowns.size();
  if (system.matrix.size() != system.rhs.size()) throw DomainError("matrix and right-hand side disagree in length");
  for (const auto& row : system.matrix) {
    if (row.size() != cols) throw DomainError("matrix row width differs from the number of unknowns");
  }
  if (system.matrix.size() < cols) {
    throw SingularSystemError("fewer equations than unknowns", static_cast<int>(system.matrix.size()));
  }
}

}  // namespace

std::vector<RatFunc> residuals(const LinearSystem& system, const std::vector<RatFunc>& values) {
  validate(system);
  if (values.size() != system.unknowns.size()) throw DomainError("wrong number of values");
  std::vector<RatFunc> out;
  for (std::size_t r = 0; r < system.matrix.size(); ++r) {
    RatFunc acc = -system.rhs[r];
    for (std::size_t c = 0; c < values.size(); ++c) {
      if (!system.matrix[r][c].is_zero()) acc = acc + system.matrix[r][c] * values[c];
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<RatFunc> solve_linear(const LinearSystem& system) {
  validate(system);
  const int rows = static_cast<int>(system.matrix.size());
  const int cols = static_cast<int>(system.unknowns.size());

  // Augmented integer-polynomial matrix, each row scaled by the lcm of its denominators.
  std::vector<std::vector<IntPoly>> a(rows, std::vector<IntPoly>(cols + 1));
  for (int r = 0; r < rows; ++r) {
    IntPoly scale = system.rhs[r].denominator();
    for (const auto& entry : system.matrix[r]) scale = lcm(scale, entry.denominator());
    for (int c = 0; c <= cols; ++c) {
      const RatFunc& entry = c < cols ? system.matrix[r][c] : system.rhs[r];
      a[r][c] = entry.numerator() * exact_quotient(scale, entry.denominator());
    }
  }

  IntPoly previous = IntPoly::constant(1);
  for (int k = 0; k < cols; ++k) {
    int pivot = -1;
    for (int r = k; r < rows; ++r) {
      if (a[r][k].is_zero()) continue;
      if (pivot < 0 || a[r][k].degree() < a[pivot][k].degree()) pivot = r;
    }
    if (pivot < 0) {
      throw SingularSystemError("singular system: no pivot for unknown '" + system.unknowns[k] + "' (column " +
                                    std::to_string(k) + ")",
                                k);
    }
    std::swap(a[k], a[pivot]);
    for (int r = k + 1; r < rows; ++r) {
      for (int c = k + 1; c <= cols; ++c) {
        a[r][c] = exact_quotient(a[k][k] * a[r][c] - a[r][k] * a[k][c], previous);
      }
      a[r][k] = IntPoly();
    }
    previous = a[k][k];
  }
  for (int r = cols; r < rows; ++r) {
    if (!a[r][cols].is_zero()) {
      throw InconsistentSystemError("inconsistent system: surplus equation reduces to 0 = " +
                                        a[r][cols].to_expression(),
                                    r);
    }
  }

  std::vector<RatFunc> x(cols);
  for (int k = cols - 1; k >= 0; --k) {
    RatFunc acc(a[k][cols]);
    for (int c = k + 1; c < cols; ++c) {
      if (!a[k][c].is_zero()) acc = acc - RatFunc(a[k][c]) * x[c];
    }
    x[k] = acc / RatFunc(a[k][k]);
  }

  for (const auto& res : residuals(system, x)) {
    if (!res.is_zero()) throw InternalError("linear solve left a nonzero residual");
  }
  return x;
}

}  // namespace cores
