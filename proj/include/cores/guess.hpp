#pragma once

// Guessing P(x, Y) = 0 for the generating function Y of a finite list of
// terms: solve for the coefficients on a prefix, then demand that the
// held-back terms agree.

#include <optional>
#include <vector>

#include "cores/algebraic.hpp"
#include "cores/bigint.hpp"

namespace cores {

inline constexpr int kDefaultGuessMargin = 4;

struct GuessSpec {
  std::vector<BigInt> terms;
  int degree_x = 0;
  int degree_y = 1;
  int margin = kDefaultGuessMargin;

  int unknowns() const { return (degree_x + 1) * (degree_y + 1); }
  // Throws DomainError naming the required number of terms when
  // |terms| < unknowns() + margin, margin < 2, degree_x < 0 or degree_y < 1.
  void validate() const;
};

// The annihilating equation with the smallest leading monomial under the
// order (i + j, j, i), provided it also kills the held-back terms.
std::optional<AlgebraicEquation> guess_algebraic(const GuessSpec& spec);

// True iff the residual vanishes at every available order. Needs terms.
bool verify_annihilation(const AlgebraicEquation& eq, const std::vector<BigInt>& terms);

struct GuessSearchResult {
  AlgebraicEquation equation;
  int degree_x;
  int degree_y;
};

// Tries every admissible pair (dx, dy) with dx <= max_x and 1 <= dy <= max_y,
// fewest unknowns first, and returns the first success.
std::optional<GuessSearchResult> guess_search(const std::vector<BigInt>& terms, int max_x, int max_y,
                                              int margin = kDefaultGuessMargin);

}  // namespace cores
