#pragma once

// Brute-force ground truth. Nothing here is clever on purpose: hook lengths
// are computed cell by cell and order ideals are enumerated one at a time.

#include <cstdint>
#include <functional>
#include <vector>

#include "cores/bigint.hpp"
#include "cores/lattice.hpp"
#include "cores/partition.hpp"

namespace cores {

// Default cap on the number of ideals an enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Gaps of the numerical semigroup generated by s and t.
struct GapPoset {
  int s = 1;
  int t = 1;
  std::vector<long> gaps;  // ascending

  bool contains(long value) const;
};

// Throws DomainError unless s, t >= 1 and gcd(s, t) = 1.
GapPoset semigroup_gaps(int s, int t);

// (s+t-1)! / (s! t!)
BigInt anderson_count(int s, int t);

// All (s,t)-cores, from the down-closed subsets of the gap poset; sorted.
// Throws ResourceError if anderson_count(s, t) exceeds the budget.
std::vector<Partition> enumerate_st_cores(int s, int t,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

// Walks every order ideal of A_n. The callback sees a reused object, so it
// must copy anything it wants to keep. Throws ResourceError up front when
// Catalan(n+1) exceeds the budget.
void for_each_ideal(int n, const std::function<void(const OrderIdeal&)>& visit,
                    std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<OrderIdeal> all_ideals(int n, std::uint64_t budget = kDefaultEnumerationBudget);

// A conjunction of restrictions on (ideal, partition) pairs. The default
// filter accepts everything.
class CoreFilter {
 public:
  enum class Kind { distinct_parts, odd_parts, repeats_at_most, diagonals_at_most };

  static CoreFilter all() { return {}; }
  static CoreFilter distinct_parts();
  static CoreFilter odd_parts();
  static CoreFilter repeats_at_most(int k);
  static CoreFilter diagonals_at_most(int k);

  CoreFilter operator&&(const CoreFilter& other) const;

  bool accepts(const OrderIdeal& ideal) const;

 private:
  struct Clause {
    Kind kind;
    int bound = 0;
  };
  std::vector<Clause> clauses_;
};

BigInt count_filtered(int n, const CoreFilter& filter,
                      std::uint64_t budget = kDefaultEnumerationBudget);

// Within every diagonal, the occupied points alternate in color.
bool alternates_within_diagonals(const OrderIdeal& ideal, int c);

// Reading occupied points by increasing label, colors alternate and the
// first label is odd. The empty ideal qualifies.
bool in_alternation_class(const OrderIdeal& ideal, int c);

// Counts ideals of A_n by brute force against the two predicates above.
BigInt count_within_diagonal_alternating(int n, int c,
                                         std::uint64_t budget = kDefaultEnumerationBudget);
BigInt count_alternation_class(int n, int c, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace cores
