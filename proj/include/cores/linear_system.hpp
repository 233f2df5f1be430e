#pragma once

#include <string>
#include <vector>

#include "cores/errors.hpp"
#include "cores/ratfunc.hpp"

namespace cores {

// matrix * unknowns = rhs over Q(x). Rows may outnumber unknowns as long as
// the extra equations are consistent.
struct LinearSystem {
  std::vector<std::vector<RatFunc>> matrix;
  std::vector<RatFunc> rhs;
  std::vector<std::string> unknowns;
};

// No nonzero pivot exists for this column once the earlier ones are eliminated.
class SingularSystemError : public DomainError {
 public:
  SingularSystemError(const std::string& what, int pivot_column)
      : DomainError(what), pivot_column_(pivot_column) {}
  int pivot_column() const { return pivot_column_; }

 private:
  int pivot_column_;
};

// An overdetermined system whose surplus equation reduces to 0 = nonzero.
class InconsistentSystemError : public DomainError {
 public:
  InconsistentSystemError(const std::string& what, int row) : DomainError(what), row_(row) {}
  int row() const { return row_; }

 private:
  int row_;
};

// Fraction-free elimination over Z[x] after clearing row denominators,
// then back substitution; the solution is checked against every equation.
std::vector<RatFunc> solve_linear(const LinearSystem& system);

// matrix * values - rhs, one entry per equation.
std::vector<RatFunc> residuals(const LinearSystem& system, const std::vector<RatFunc>& values);

}  // namespace cores
