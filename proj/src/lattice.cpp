#include "cores/lattice.hpp"

#include <bit>
#include <string>

#include "cores/errors.hpp"

namespace cores {
namespace {

std::uint64_t low_mask(int width) {
  if (width <= 0) return 0;
  if (width >= 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << width) - 1;
}

void check_order(int order) {
  if (order > kMaxLatticeOrder) {
    throw DomainError("lattice order " + std::to_string(order) + " exceeds the supported maximum " +
                      std::to_string(kMaxLatticeOrder));
  }
}

std::string describe(TrianglePoint p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

}  // namespace

TriangleLattice::TriangleLattice(int order) : order_(order) { check_order(order); }

std::size_t TriangleLattice::size() const {
  const auto n = static_cast<std::size_t>(diagonal_count());
  return n * (n + 1) / 2;
}

bool TriangleLattice::contains(TrianglePoint p) const {
  return p.i >= 0 && p.j >= 0 && p.i + p.j <= order_ - 1;
}

std::vector<TrianglePoint> TriangleLattice::points() const { return reading_order(order_); }

long label(int n, TrianglePoint p) {
  if (!TriangleLattice(n).contains(p)) {
    throw DomainError("point " + describe(p) + " is not in A_" + std::to_string(n));
  }
  const long nn = n;
  return (nn + 1) * nn - 1 - (nn + 2) * p.i - (nn + 1) * p.j;
}

long label_at(int n, int t, int p) {
  const long nn = n;
  const long d = nn - 1 - t;
  return (nn + 1) * nn - 1 - (nn + 2) * d + p;
}

std::optional<TrianglePoint> point_with_label(int n, long value) {
  for (int t = 0; t < n; ++t) {
    const long p = value - label_at(n, t, 0);
    const int d = n - 1 - t;
    if (p >= 0 && p <= d) return TrianglePoint{d - static_cast<int>(p), static_cast<int>(p)};
  }
  return std::nullopt;
}

int color(int c, TrianglePoint p) { return (1 + c * p.i + (1 - c) * p.j) & 1; }

std::vector<TrianglePoint> reading_order(int n) {
  check_order(n);
  std::vector<TrianglePoint> out;
  for (int t = 0; t < n; ++t) {
    const int d = n - 1 - t;
    for (int p = 0; p <= d; ++p) out.push_back({d - p, p});
  }
  return out;
}

OrderIdeal::OrderIdeal(int order) : order_(order) {
  check_order(order);
  diagonals_.assign(order > 0 ? order : 0, 0);
}

OrderIdeal OrderIdeal::full(int order) {
  OrderIdeal out(order);
  for (int t = 0; t < out.diagonal_count(); ++t) out.diagonals_[t] = low_mask(order - t);
  return out;
}

OrderIdeal OrderIdeal::from_diagonals(int order, std::vector<std::uint64_t> masks) {
  OrderIdeal out(order);
  if (static_cast<int>(masks.size()) > out.diagonal_count()) {
    while (!masks.empty() && masks.back() == 0) masks.pop_back();
    if (static_cast<int>(masks.size()) > out.diagonal_count()) {
      throw DomainError("A_" + std::to_string(order) + " has only " + std::to_string(out.diagonal_count()) +
                        " diagonals");
    }
  }
  for (std::size_t t = 0; t < masks.size(); ++t) {
    const int width = order - static_cast<int>(t);
    if ((masks[t] & ~low_mask(width)) != 0) {
      throw DomainError("diagonal " + std::to_string(t) + " mask has bits outside A_" + std::to_string(order));
    }
    if (t > 0 && (masks[t] & ~(masks[t - 1] & (masks[t - 1] >> 1))) != 0) {
      throw ContractError("point set is not an order ideal of A_" + std::to_string(order) + " (diagonal " +
                          std::to_string(t) + " lacks support)");
    }
    out.diagonals_[t] = masks[t];
  }
  return out;
}

OrderIdeal OrderIdeal::from_points(int order, std::span<const TrianglePoint> points) {
  const TriangleLattice lattice(order);
  std::vector<std::uint64_t> masks(lattice.diagonal_count(), 0);
  for (const auto& p : points) {
    if (!lattice.contains(p)) {
      throw DomainError("point " + describe(p) + " is not in A_" + std::to_string(order));
    }
    masks[order - 1 - (p.i + p.j)] |= std::uint64_t{1} << p.j;
  }
  return from_diagonals(order, std::move(masks));
}

OrderIdeal OrderIdeal::from_labels(int order, std::span<const long> labels) {
  std::vector<TrianglePoint> points;
  points.reserve(labels.size());
  for (long value : labels) {
    auto p = point_with_label(order, value);
    if (!p) throw DomainError("label " + std::to_string(value) + " does not occur in A_" + std::to_string(order));
    points.push_back(*p);
  }
  return from_points(order, points);
}

std::uint64_t OrderIdeal::diagonal(int t) const {
  if (t < 0 || t >= diagonal_count()) return 0;
  return diagonals_[t];
}

bool OrderIdeal::empty() const { return depth() == 0; }

int OrderIdeal::depth() const {
  int t = 0;
  while (t < diagonal_count() && diagonals_[t] != 0) ++t;
  return t;
}

std::size_t OrderIdeal::size() const {
  std::size_t total = 0;
  for (auto mask : diagonals_) total += std::popcount(mask);
  return total;
}

bool OrderIdeal::contains(TrianglePoint p) const {
  if (!TriangleLattice(order_).contains(p)) return false;
  return (diagonals_[order_ - 1 - (p.i + p.j)] >> p.j) & 1;
}

std::vector<TrianglePoint> OrderIdeal::points() const {
  std::vector<TrianglePoint> out;
  for (int t = 0; t < diagonal_count(); ++t) {
    const int d = order_ - 1 - t;
    for (std::uint64_t mask = diagonals_[t]; mask != 0; mask &= mask - 1) {
      const int p = std::countr_zero(mask);
      out.push_back({d - p, p});
    }
  }
  return out;
}

std::vector<long> OrderIdeal::labels() const {
  std::vector<long> out;
  for (int t = 0; t < diagonal_count(); ++t) {
    for (std::uint64_t mask = diagonals_[t]; mask != 0; mask &= mask - 1) {
      out.push_back(label_at(order_, t, std::countr_zero(mask)));
    }
  }
  return out;
}

bool is_order_ideal(int n, std::span<const TrianglePoint> points) {
  try {
    (void)OrderIdeal::from_points(n, points);
    return true;
  } catch (const ContractError&) {
    return false;
  }
}

Partition ideal_to_partition(const OrderIdeal& ideal) {
  return Partition::from_first_column_hooks(ideal.labels());
}

bool has_consecutive_labels(const OrderIdeal& ideal) {
  // Labels on different diagonals differ by at least 3.
  for (int t = 0; t < ideal.diagonal_count(); ++t) {
    const auto mask = ideal.diagonal(t);
    if ((mask & (mask >> 1)) != 0) return true;
  }
  return false;
}

int longest_label_run(const OrderIdeal& ideal) {
  int best = 0;
  for (int t = 0; t < ideal.diagonal_count(); ++t) {
    auto mask = ideal.diagonal(t);
    int run = 0;
    while (mask != 0) {
      mask &= mask >> 1;
      ++run;
    }
    best = std::max(best, run);
  }
  return best;
}

DecompositionTriple canonical_decompose(const OrderIdeal& ideal) {
  const int n = ideal.order();
  if (n < 0) throw ContractError("canonical decomposition needs a lattice order >= 0");
  const int i = std::min(n, std::countr_one(ideal.diagonal(0)));

  std::vector<std::uint64_t> lower(i > 1 ? i - 1 : 0);
  for (int t = 1; t < i; ++t) lower[t - 1] = ideal.diagonal(t) & low_mask(i - t);

  const int upper_order = n - 1 - i;
  std::vector<std::uint64_t> upper(upper_order > 0 ? upper_order : 0);
  for (int t = 0; t < upper_order; ++t) upper[t] = ideal.diagonal(t) >> (i + 1);

  for (int t = 0; t < n; ++t) {
    // Everything left of and below the first unoccupied outer point is empty.
    const std::uint64_t gap = low_mask(i + 1) & ~low_mask(std::max(i - t, 0));
    if ((ideal.diagonal(t) & gap) != 0) throw InternalError("occupied point inside the forced-empty region");
  }
  return {i, OrderIdeal::from_diagonals(i - 1, std::move(lower)),
          OrderIdeal::from_diagonals(upper_order, std::move(upper))};
}

OrderIdeal recompose(const DecompositionTriple& triple) {
  const int i = triple.split_index;
  if (triple.lower.order() != i - 1) throw ContractError("lower component must be an ideal of A_{i-1}");
  const int n = triple.lower.order() + triple.upper.order() + 2;
  std::vector<std::uint64_t> masks(n > 0 ? n : 0, 0);
  for (int t = 0; t < n; ++t) {
    std::uint64_t mask = triple.upper.diagonal(t) << (i + 1);
    mask |= t == 0 ? low_mask(i) : triple.lower.diagonal(t - 1);
    masks[t] = mask;
  }
  return OrderIdeal::from_diagonals(n, std::move(masks));
}

BigInt count_all_ideals(int n) {
  if (n < -1) throw DomainError("count_all_ideals needs n >= -1");
  // a[m + 1] holds a_m so that a_{-1} sits at index 0.
  std::vector<BigInt> a(n + 2);
  a[0] = 1;
  for (int m = 0; m <= n; ++m) {
    BigInt total = 0;
    for (int i = 0; i <= m; ++i) total += a[i] * a[m - i];
    a[m + 1] = total;
  }
  return a[n + 1];
}

BigInt count_distinct_ideals(int n) {
  if (n < 0) throw DomainError("count_distinct_ideals needs n >= 0");
  BigInt prev = 1, cur = 2;
  if (n == 0) return prev;
  for (int m = 2; m <= n; ++m) {
    BigInt next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace cores
