#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace cores {

// An integer partition: a non-increasing list of positive parts.
class Partition {
 public:
  Partition() = default;

  // Throws DomainError unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  // Builds the partition whose first-column hook lengths are the given
  // distinct positive integers: with a_1 > ... > a_k, part m is a_m - (k - m).
  static Partition from_first_column_hooks(std::vector<long> hooks);

  std::span<const int> parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long size() const;
  int operator[](std::size_t row) const { return parts_[row]; }

  Partition conjugate() const;

  bool has_distinct_parts() const;
  bool all_parts_odd() const;
  // Largest number of times any single part value occurs (0 for the empty partition).
  int max_multiplicity() const;

  // Compact form used in the literature for small parts, e.g. "4211"; "empty" for no parts.
  std::string compact() const;
  // "(4,2,1,1)"
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// hooks.rows[i][j] is the hook length of cell (i, j), 0-based.
struct HookTable {
  std::vector<std::vector<int>> rows;

  bool contains(int hook) const;
  std::vector<int> distinct_hooks() const;  // ascending
};

HookTable hook_lengths(const Partition& p);

// True iff no cell of p has hook length s or t.
bool is_st_core(const Partition& p, int s, int t);

}  // namespace cores
