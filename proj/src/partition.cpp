#include "cores/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "cores/errors.hpp"

namespace cores {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t m = 0; m < parts_.size(); ++m) {
    if (parts_[m] <= 0) throw DomainError("partition parts must be positive");
    if (m > 0 && parts_[m] > parts_[m - 1]) throw DomainError("partition parts must be non-increasing");
  }
}

Partition Partition::from_first_column_hooks(std::vector<long> hooks) {
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  if (std::adjacent_find(hooks.begin(), hooks.end()) != hooks.end()) {
    throw DomainError("first-column hook lengths must be distinct");
  }
  if (!hooks.empty() && hooks.back() <= 0) throw DomainError("hook lengths must be positive");
  const long k = static_cast<long>(hooks.size());
  std::vector<int> parts(hooks.size());
  for (long m = 0; m < k; ++m) parts[m] = static_cast<int>(hooks[m] - (k - 1 - m));
  Partition out;
  out.parts_ = std::move(parts);
  return out;
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition Partition::conjugate() const {
  Partition out;
  if (parts_.empty()) return out;
  out.parts_.assign(parts_.front(), 0);
  for (int part : parts_) {
    for (int col = 0; col < part; ++col) ++out.parts_[col];
  }
  return out;
}

bool Partition::has_distinct_parts() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::all_parts_odd() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int v) { return v % 2 == 1; });
}

int Partition::max_multiplicity() const {
  int best = 0;
  for (std::size_t m = 0; m < parts_.size();) {
    std::size_t end = m;
    while (end < parts_.size() && parts_[end] == parts_[m]) ++end;
    best = std::max(best, static_cast<int>(end - m));
    m = end;
  }
  return best;
}

std::string Partition::compact() const {
  if (parts_.empty()) return "empty";
  std::string out;
  for (int part : parts_) out += std::to_string(part);
  return out;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t m = 0; m < parts_.size(); ++m) {
    if (m) out += ",";
    out += std::to_string(parts_[m]);
  }
  return out + ")";
}

bool HookTable::contains(int hook) const {
  for (const auto& row : rows) {
    if (std::find(row.begin(), row.end(), hook) != row.end()) return true;
  }
  return false;
}

std::vector<int> HookTable::distinct_hooks() const {
  std::set<int> seen;
  for (const auto& row : rows) seen.insert(row.begin(), row.end());
  return {seen.begin(), seen.end()};
}

HookTable hook_lengths(const Partition& p) {
  const Partition conj = p.conjugate();
  HookTable table;
  table.rows.resize(p.num_parts());
  for (int i = 0; i < p.num_parts(); ++i) {
    table.rows[i].resize(p[i]);
    for (int j = 0; j < p[i]; ++j) {
      // 1-based: lambda_i - i + lambda'_j - j + 1
      table.rows[i][j] = p[i] - (i + 1) + conj[j] - (j + 1) + 1;
    }
  }
  return table;
}

bool is_st_core(const Partition& p, int s, int t) {
  const HookTable table = hook_lengths(p);
  return !table.contains(s) && !table.contains(t);
}

}  // namespace cores
