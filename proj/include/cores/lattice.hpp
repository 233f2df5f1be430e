#pragma once

// The triangular poset A_n = {(i, j) : i, j >= 0, i + j <= n - 1} that encodes
// the numerical-semigroup gaps of <n+1, n+2>, together with its order ideals.
//
// Geometry: i is the horizontal coordinate and j the vertical one, so (n-1, 0)
// is the bottom-right corner. Diagonals have constant d = i + j; they are
// indexed relative to the outside, t = n - 1 - d, so t = 0 is the outermost
// diagonal. Within a diagonal a point is addressed by its position p = j,
// which orders the points by increasing label.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cores/bigint.hpp"
#include "cores/partition.hpp"

namespace cores {

// Orders above this do not fit one diagonal in a 64-bit word.
inline constexpr int kMaxLatticeOrder = 63;

struct TrianglePoint {
  int i = 0;
  int j = 0;

  auto operator<=>(const TrianglePoint&) const = default;
};

class TriangleLattice {
 public:
  // Orders <= 0 denote the empty lattice; A_{-1} and A_{-2} appear as
  // decomposition children.
  explicit TriangleLattice(int order);

  int order() const { return order_; }
  int diagonal_count() const { return order_ > 0 ? order_ : 0; }
  std::size_t size() const;
  bool contains(TrianglePoint p) const;

  // Points sorted by increasing label.
  std::vector<TrianglePoint> points() const;

 private:
  int order_;
};

// L(i, j) = (n+1)n - 1 - (n+2)i - (n+1)j. Throws DomainError when p is not in A_n.
long label(int n, TrianglePoint p);

// Inverse of label(); nullopt when no point of A_n carries that label.
std::optional<TrianglePoint> point_with_label(int n, long value);

// C(i, j) = 1 + c*i + (1-c)*j mod 2, for c in {0, 1}.
int color(int c, TrianglePoint p);

// Label of the point at position p on relative diagonal t.
long label_at(int n, int t, int p);

// Points of A_n by increasing label: outer diagonal first, each diagonal from
// bottom-right to top-left.
std::vector<TrianglePoint> reading_order(int n);

// An up-right-closed subset of A_n, stored as one bit mask per diagonal.
class OrderIdeal {
 public:
  // The empty ideal of A_order.
  explicit OrderIdeal(int order = 0);

  static OrderIdeal full(int order);

  // Throws DomainError for points outside A_order, ContractError if the set
  // is not up-right closed.
  static OrderIdeal from_points(int order, std::span<const TrianglePoint> points);
  static OrderIdeal from_labels(int order, std::span<const long> labels);

  // masks[t] is the occupancy of relative diagonal t (bit p = position p).
  // Missing trailing masks are empty. Contract-checked like from_points.
  static OrderIdeal from_diagonals(int order, std::vector<std::uint64_t> masks);

  int order() const { return order_; }
  int diagonal_count() const { return static_cast<int>(diagonals_.size()); }
  std::uint64_t diagonal(int t) const;
  bool empty() const;
  // Number of occupied diagonals; they always form an outermost block.
  int depth() const;
  std::size_t size() const;
  bool contains(TrianglePoint p) const;

  // Occupied points in reading order (increasing label).
  std::vector<TrianglePoint> points() const;
  // Occupied labels, ascending.
  std::vector<long> labels() const;

  bool operator==(const OrderIdeal&) const = default;

 private:
  friend class IdealEnumerator;

  int order_;
  std::vector<std::uint64_t> diagonals_;
};

bool is_order_ideal(int n, std::span<const TrianglePoint> points);

// Partition with first-column hooks equal to the ideal's labels; always an
// (n+1, n+2)-core.
Partition ideal_to_partition(const OrderIdeal& ideal);

// True iff two occupied points carry consecutive labels, i.e. the mapped
// partition has a repeated part.
bool has_consecutive_labels(const OrderIdeal& ideal);

// Longest run of consecutive occupied labels (= largest part multiplicity).
int longest_label_run(const OrderIdeal& ideal);

// S <-> (i, S1, S2): i is the number of leading occupied outer-diagonal
// points (labels 1..i), S1 is the ideal of A_{i-1} strictly below-right of
// the first unoccupied outer point once the i mandatory points are removed,
// and S2 is the ideal of A_{n-1-i} strictly above-left of it.
struct DecompositionTriple {
  int split_index = 0;
  OrderIdeal lower;
  OrderIdeal upper;
};

DecompositionTriple canonical_decompose(const OrderIdeal& ideal);

// Inverse of canonical_decompose; the lattice order is lower + upper + 2.
OrderIdeal recompose(const DecompositionTriple& triple);

// Number of order ideals of A_n from a_n = sum_{i=0}^{n} a_{i-1} a_{n-1-i}, a_{-1} = 1.
BigInt count_all_ideals(int n);

// Ideals without consecutive labels (distinct-part cores): d_n = d_{n-1} + d_{n-2},
// d_0 = 1, d_1 = 2.
BigInt count_distinct_ideals(int n);

}  // namespace cores
