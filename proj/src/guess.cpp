#include "cores/guess.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "cores/errors.hpp"

namespace cores {

void GuessSpec::validate() const {
  if (degree_x < 0 || degree_y < 1) throw DomainError("guess bounds need degree_x >= 0 and degree_y >= 1");
  if (margin < 2) throw DomainError("guess margin must be at least 2");
  const long needed = static_cast<long>(unknowns()) + margin;
  if (static_cast<long>(terms.size()) < needed) {
    throw DomainError("bounds (" + std::to_string(degree_x) + ", " + std::to_string(degree_y) + ") with margin " +
                      std::to_string(margin) + " need N >= " + std::to_string(needed) + " terms, got " +
                      std::to_string(terms.size()));
  }
}

namespace {

// Powers U^0..U^dy truncated to `order` coefficients, exact integers.
std::vector<std::vector<BigInt>> series_powers(const std::vector<BigInt>& terms, int dy, int order) {
  std::vector<std::vector<BigInt>> powers(dy + 1, std::vector<BigInt>(order));
  powers[0][0] = 1;
  for (int j = 1; j <= dy; ++j) {
    for (int a = 0; a < order; ++a) {
      if (powers[j - 1][a] == 0) continue;
      for (int b = 0; a + b < order; ++b) powers[j][a + b] += powers[j - 1][a] * terms[b];
    }
  }
  return powers;
}

}  // namespace

std::optional<AlgebraicEquation> guess_algebraic(const GuessSpec& spec) {
  spec.validate();
  const int n_terms = static_cast<int>(spec.terms.size());
  const int rows = n_terms - spec.margin;

  std::vector<std::pair<int, int>> columns;  // (i, j)
  for (int i = 0; i <= spec.degree_x; ++i) {
    for (int j = 0; j <= spec.degree_y; ++j) columns.emplace_back(i, j);
  }
  std::sort(columns.begin(), columns.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.first + a.second, a.second, a.first) < std::tuple(b.first + b.second, b.second, b.first);
  });
  const int cols = static_cast<int>(columns.size());

  const auto powers = series_powers(spec.terms, spec.degree_y, rows);
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const auto [i, j] = columns[c];
      if (r >= i) m[r][c] = powers[j][r - i];
    }
  }

  // Reduced row echelon form; stop at the first column without a pivot.
  int rank = 0;
  int free_column = -1;
  std::vector<int> pivot_columns;
  for (int c = 0; c < cols; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      free_column = c;
      break;
    }
    std::swap(m[rank], m[pivot]);
    const Rational inv = 1 / m[rank][c];
    for (int k = c; k < cols; ++k) m[rank][k] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational factor = m[r][c];
      for (int k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    pivot_columns.push_back(c);
    ++rank;
  }
  if (free_column < 0) return std::nullopt;

  // Kernel vector: 1 at the free column, determined values at the earlier pivots.
  std::vector<Rational> kernel(cols);
  kernel[free_column] = 1;
  for (int r = 0; r < rank; ++r) kernel[pivot_columns[r]] = -m[r][free_column];

  BigInt scale = 1;
  for (const auto& q : kernel) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<std::vector<BigInt>> grid(spec.degree_x + 1, std::vector<BigInt>(spec.degree_y + 1));
  for (int c = 0; c < cols; ++c) {
    const Rational scaled = kernel[c] * Rational(scale);
    grid[columns[c].first][columns[c].second] = scaled.get_num();
  }
  AlgebraicEquation eq(std::move(grid));
  if (!verify_annihilation(eq, spec.terms)) return std::nullopt;
  return eq;
}

bool verify_annihilation(const AlgebraicEquation& eq, const std::vector<BigInt>& terms) {
  if (terms.empty()) throw DomainError("verification needs at least one term");
  return algebraic_residual(eq, PowerSeries::from_integers(terms)).is_zero();
}

std::optional<GuessSearchResult> guess_search(const std::vector<BigInt>& terms, int max_x, int max_y, int margin) {
  std::vector<std::pair<int, int>> bounds;
  for (int dx = 0; dx <= max_x; ++dx) {
    for (int dy = 1; dy <= max_y; ++dy) {
      if (static_cast<long>((dx + 1) * (dy + 1) + margin) <= static_cast<long>(terms.size())) bounds.emplace_back(dx, dy);
    }
  }
  std::sort(bounds.begin(), bounds.end(), [](const auto& a, const auto& b) {
    return std::tuple((a.first + 1) * (a.second + 1), a.second) < std::tuple((b.first + 1) * (b.second + 1), b.second);
  });
  for (const auto& [dx, dy] : bounds) {
    if (auto eq = guess_algebraic({terms, dx, dy, margin})) return GuessSearchResult{*eq, dx, dy};
  }
  return std::nullopt;
}

}  // namespace cores
