#include "cores/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "cores/errors.hpp"

namespace cores {
namespace {

void check_pair(int s, int t) {
  if (s < 1 || t < 1 || std::gcd(s, t) != 1) {
    throw DomainError("(" + std::to_string(s) + "," + std::to_string(t) +
                      ") must be positive and coprime");
  }
}

void check_budget(const BigInt& predicted, std::uint64_t budget, const std::string& what) {
  if (predicted > from_u64(budget)) {
    throw ResourceError(what + " would visit " + to_string(predicted) + " objects, over the budget of " +
                        std::to_string(budget));
  }
}

}  // namespace

bool GapPoset::contains(long value) const { return std::binary_search(gaps.begin(), gaps.end(), value); }

GapPoset semigroup_gaps(int s, int t) {
  check_pair(s, t);
  GapPoset out{s, t, {}};
  const long frobenius = static_cast<long>(s) * t - s - t;
  if (frobenius < 1) return out;
  std::vector<char> representable(frobenius + 1, 0);
  representable[0] = 1;
  for (long y = 1; y <= frobenius; ++y) {
    representable[y] = (y >= s && representable[y - s]) || (y >= t && representable[y - t]);
  }
  for (long y = 1; y <= frobenius; ++y) {
    if (!representable[y]) out.gaps.push_back(y);
  }
  return out;
}

BigInt anderson_count(int s, int t) {
  check_pair(s, t);
  return factorial(s + t - 1) / (factorial(s) * factorial(t));
}

std::vector<Partition> enumerate_st_cores(int s, int t, std::uint64_t budget) {
  const GapPoset poset = semigroup_gaps(s, t);
  check_budget(anderson_count(s, t), budget, "core enumeration");

  const auto& gaps = poset.gaps;
  std::vector<char> chosen(gaps.size(), 0);
  std::vector<long> members;
  std::vector<Partition> out;

  auto index_of = [&](long y) -> long {
    auto it = std::lower_bound(gaps.begin(), gaps.end(), y);
    return (it != gaps.end() && *it == y) ? it - gaps.begin() : -1;
  };
  // y may join only if y - s and y - t are members whenever they are gaps.
  auto allowed = [&](std::size_t k) {
    for (int step : {s, t}) {
      const long idx = index_of(gaps[k] - step);
      if (idx >= 0 && !chosen[idx]) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == gaps.size()) {
      out.push_back(Partition::from_first_column_hooks(members));
      return;
    }
    walk(k + 1);
    if (allowed(k)) {
      chosen[k] = 1;
      members.push_back(gaps[k]);
      walk(k + 1);
      members.pop_back();
      chosen[k] = 0;
    }
  };
  walk(0);
  std::sort(out.begin(), out.end());
  return out;
}

class IdealEnumerator {
 public:
  static void run(int n, const std::function<void(const OrderIdeal&)>& visit) {
    OrderIdeal ideal(n);
    if (n <= 0) {
      visit(ideal);
      return;
    }
    const std::uint64_t outer = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    descend(ideal, 0, outer, visit);
  }

 private:
  static void descend(OrderIdeal& ideal, int t, std::uint64_t allowed,
                      const std::function<void(const OrderIdeal&)>& visit) {
    // Empty choice first, then every nonempty submask of the allowed set.
    ideal.diagonals_[t] = 0;
    visit(ideal);
    for (std::uint64_t mask = allowed; mask != 0; mask = (mask - 1) & allowed) {
      ideal.diagonals_[t] = mask;
      if (t + 1 < ideal.diagonal_count()) {
        descend(ideal, t + 1, mask & (mask >> 1), visit);
      } else {
        visit(ideal);
      }
    }
    ideal.diagonals_[t] = 0;
  }
};

void for_each_ideal(int n, const std::function<void(const OrderIdeal&)>& visit, std::uint64_t budget) {
  if (n < 0) throw DomainError("lattice order must be >= 0");
  check_budget(catalan(n + 1), budget, "ideal enumeration of A_" + std::to_string(n));
  IdealEnumerator::run(n, visit);
}

std::vector<OrderIdeal> all_ideals(int n, std::uint64_t budget) {
  std::vector<OrderIdeal> out;
  for_each_ideal(n, [&](const OrderIdeal& ideal) { out.push_back(ideal); }, budget);
  return out;
}

CoreFilter CoreFilter::distinct_parts() {
  CoreFilter f;
  f.clauses_.push_back({Kind::distinct_parts});
  return f;
}

CoreFilter CoreFilter::odd_parts() {
  CoreFilter f;
  f.clauses_.push_back({Kind::odd_parts});
  return f;
}

CoreFilter CoreFilter::repeats_at_most(int k) {
  if (k < 1) throw DomainError("repeats_at_most needs k >= 1");
  CoreFilter f;
  f.clauses_.push_back({Kind::repeats_at_most, k});
  return f;
}

CoreFilter CoreFilter::diagonals_at_most(int k) {
  if (k < 0) throw DomainError("diagonals_at_most needs k >= 0");
  CoreFilter f;
  f.clauses_.push_back({Kind::diagonals_at_most, k});
  return f;
}

CoreFilter CoreFilter::operator&&(const CoreFilter& other) const {
  CoreFilter f = *this;
  f.clauses_.insert(f.clauses_.end(), other.clauses_.begin(), other.clauses_.end());
  return f;
}

bool CoreFilter::accepts(const OrderIdeal& ideal) const {
  // Cheap ideal-level clauses first; the partition is built only if needed.
  for (const auto& clause : clauses_) {
    if (clause.kind == Kind::diagonals_at_most && ideal.depth() > clause.bound) return false;
  }
  std::optional<Partition> partition;
  for (const auto& clause : clauses_) {
    if (clause.kind == Kind::diagonals_at_most) continue;
    if (!partition) partition = ideal_to_partition(ideal);
    switch (clause.kind) {
      case Kind::distinct_parts:
        if (!partition->has_distinct_parts()) return false;
        break;
      case Kind::odd_parts:
        if (!partition->all_parts_odd()) return false;
        break;
      case Kind::repeats_at_most:
        if (partition->max_multiplicity() > clause.bound) return false;
        break;
      case Kind::diagonals_at_most:
        break;
    }
  }
  return true;
}

BigInt count_filtered(int n, const CoreFilter& filter, std::uint64_t budget) {
  std::uint64_t count = 0;
  for_each_ideal(n, [&](const OrderIdeal& ideal) { count += filter.accepts(ideal) ? 1 : 0; }, budget);
  return from_u64(count);
}

bool alternates_within_diagonals(const OrderIdeal& ideal, int c) {
  const int n = ideal.order();
  for (int t = 0; t < ideal.diagonal_count(); ++t) {
    const int d = n - 1 - t;
    int previous = -1;
    for (int p = 0; p <= d; ++p) {
      if (!((ideal.diagonal(t) >> p) & 1)) continue;
      const int col = color(c, {d - p, p});
      if (col == previous) return false;
      previous = col;
    }
  }
  return true;
}

bool in_alternation_class(const OrderIdeal& ideal, int c) {
  const auto pts = ideal.points();
  if (pts.empty()) return true;
  if (label(ideal.order(), pts.front()) % 2 == 0) return false;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (color(c, pts[k]) == color(c, pts[k - 1])) return false;
  }
  return true;
}

BigInt count_within_diagonal_alternating(int n, int c, std::uint64_t budget) {
  std::uint64_t count = 0;
  for_each_ideal(n, [&](const OrderIdeal& ideal) { count += alternates_within_diagonals(ideal, c) ? 1 : 0; },
                 budget);
  return from_u64(count);
}

BigInt count_alternation_class(int n, int c, std::uint64_t budget) {
  std::uint64_t count = 0;
  for_each_ideal(n, [&](const OrderIdeal& ideal) { count += in_alternation_class(ideal, c) ? 1 : 0; }, budget);
  return from_u64(count);
}

}  // namespace cores
