#pragma once

// Profile-refined canonical-decomposition DP for color-alternating ideals.

#include <cstdint>
#include <memory>

#include "cores/bigint.hpp"
#include "cores/profile.hpp"
#include "cores/sequence.hpp"

namespace cores {

struct DpOptions {
  int threads = 1;
  std::uint64_t memory_budget = 0;  // bytes of memo; 0 means unlimited
  double time_budget = 0;           // seconds; 0 means unlimited
};

// Holds the memo, so reuse one counter across many queries. Safe to call
// from several threads at once when constructed with threads > 1.
class ProfileCounter {
 public:
  explicit ProfileCounter(DpOptions options = {});
  ~ProfileCounter();
  ProfileCounter(const ProfileCounter&) = delete;
  ProfileCounter& operator=(const ProfileCounter&) = delete;

  // Ideals of A_n alternating in color inside every diagonal, with the given
  // profile. Orders n <= 0 have only the empty ideal.
  BigInt count_by_profile(int n, int c, const Profile& profile);

  // Ideals whose occupied points alternate in color in reading order and
  // whose first label is odd; the empty ideal counts. Needs n >= 1.
  BigInt alternating_count(int n, int c);

  std::size_t memo_entries() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// s_0 = 1 and s_n = alternating_count(n, n mod 2): cores into odd parts.
CountSequence straub_sequence(int max_n, const DpOptions& options = {});

// t_0 = 1 and t_n = alternating_count(n, (n+1) mod 2).
CountSequence sister_sequence(int max_n, const DpOptions& options = {});

// A047749 at index n+2. Throws ContractError if a division is inexact.
BigInt sister_closed_form(int n);
CountSequence sister_closed_form_sequence(int max_n);

}  // namespace cores
