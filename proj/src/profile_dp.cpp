#include "cores/profile_dp.hpp"

#include <absl/container/flat_hash_map.h>

#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "cores/errors.hpp"

namespace cores {
namespace {

constexpr int kShards = 64;

std::uint64_t pair_mask(int length) { return length >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * length)) - 1; }

std::uint64_t flip(int length, std::uint64_t bits, int f) { return f ? bits ^ pair_mask(length) : bits; }

std::uint64_t checked_mul_add(std::uint64_t total, std::uint64_t a, std::uint64_t b) {
  std::uint64_t product = 0;
  if (__builtin_mul_overflow(a, b, &product) || __builtin_add_overflow(total, product, &total)) {
    throw ResourceError("profile DP count exceeds 64 bits; the requested order is too large");
  }
  return total;
}

}  // namespace

struct ProfileCounter::Impl {
  struct Shard {
    std::mutex lock;
    absl::flat_hash_map<std::uint64_t, std::uint64_t> memo;
  };

  explicit Impl(DpOptions opts) : options(opts), concurrent(opts.threads > 1) {}

  DpOptions options;
  bool concurrent;
  std::array<Shard, kShards> shards;
  std::atomic<std::uint64_t> inserts{0};
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  Shard& shard_for(std::uint64_t key) { return shards[(key * 0x9E3779B97F4A7C15ULL) >> 58]; }

  bool find(std::uint64_t key, std::uint64_t& value) {
    Shard& s = shard_for(key);
    std::unique_lock guard(s.lock, std::defer_lock);
    if (concurrent) guard.lock();
    auto it = s.memo.find(key);
    if (it == s.memo.end()) return false;
    value = it->second;
    return true;
  }

  void store(std::uint64_t key, std::uint64_t value) {
    Shard& s = shard_for(key);
    {
      std::unique_lock guard(s.lock, std::defer_lock);
      if (concurrent) guard.lock();
      // Another thread may have finished the same key; both values agree.
      s.memo.try_emplace(key, value);
    }
    if ((inserts.fetch_add(1, std::memory_order_relaxed) & 0xFFF) == 0) check_budgets();
  }

  std::size_t entries() {
    std::size_t total = 0;
    for (auto& s : shards) {
      std::unique_lock guard(s.lock, std::defer_lock);
      if (concurrent) guard.lock();
      total += s.memo.size();
    }
    return total;
  }

  std::size_t approximate_bytes() {
    std::size_t total = 0;
    for (auto& s : shards) {
      std::unique_lock guard(s.lock, std::defer_lock);
      if (concurrent) guard.lock();
      total += s.memo.capacity() * (sizeof(std::pair<std::uint64_t, std::uint64_t>) + 1);
    }
    return total;
  }

  void check_budgets() {
    if (options.time_budget > 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
      if (elapsed.count() > options.time_budget) {
        throw ResourceError("time budget of " + std::to_string(options.time_budget) + " s exceeded");
      }
    }
    if (options.memory_budget > 0) {
      const auto bytes = approximate_bytes();
      if (bytes > options.memory_budget) {
        throw ResourceError("memo uses about " + std::to_string(bytes) + " bytes, over the budget of " +
                            std::to_string(options.memory_budget));
      }
    }
  }

  // Within-diagonal alternating ideals of A_m with the packed profile.
  std::uint64_t count(int m, int c, int K, std::uint64_t bits) {
    if (m <= 0) return K == 0 ? 1 : 0;
    if (K == 0) return 1;
    if (K > m) return 0;
    const std::uint64_t key = static_cast<std::uint64_t>(m) | static_cast<std::uint64_t>(c) << 6 |
                              static_cast<std::uint64_t>(K) << 7 | bits << 12;
    std::uint64_t cached = 0;
    if (find(key, cached)) return cached;

    const int a0 = bits & 1;
    const int b0 = (bits >> 1) & 1;
    const int rf = (1 + c * (m - 1)) & 1;  // color of the first mandatory point
    std::uint64_t total = 0;

    for (int i = 0; i <= m; ++i) {
      const int m2 = m - 1 - i;
      const int f2 = ((1 - c) * (i + 1)) & 1;
      if (i == 0) {
        total = checked_mul_add(total, 1, count(m2, c, K, flip(K, bits, f2)));
        continue;
      }
      if (a0 != rf) continue;
      const int m1 = i - 1;
      const int f1 = (c * (m - i)) & 1;
      const int rl = (1 + c * (m - i) + (1 - c) * (i - 1)) & 1;  // color of the last mandatory point

      for (int k1 = 0; k1 <= std::min(K - 1, m1); ++k1) {
        for (int k2 = 0; k2 <= std::min(K, std::max(m2, 0)); ++k2) {
          if (std::max(k1 + 1, k2) != K) continue;
          if (k2 == 0 && b0 != rl) continue;

          std::uint64_t p1 = 0, p2 = 0;
          if (k2 >= 1) p2 |= static_cast<std::uint64_t>((1 - rl) | (b0 << 1));
          const int shared = std::min(k1, k2 - 1);  // diagonals 1..shared hold both parts
          for (int t = 1; t < K; ++t) {
            const std::uint64_t a = (bits >> (2 * t)) & 1;
            const std::uint64_t b = (bits >> (2 * t + 1)) & 1;
            if (t <= shared) {
              p1 |= a << (2 * (t - 1));
              p2 |= b << (2 * t + 1);
            } else if (t <= k1) {
              p1 |= (a | b << 1) << (2 * (t - 1));
            } else {
              p2 |= (a | b << 1) << (2 * t);
            }
          }
          // The lower part's last color y on a shared diagonal is free; the
          // upper part must start with the opposite color.
          const std::uint64_t combos = std::uint64_t{1} << std::max(shared, 0);
          for (std::uint64_t y = 0; y < combos; ++y) {
            std::uint64_t q1 = p1, q2 = p2;
            for (int t = 1; t <= shared; ++t) {
              const std::uint64_t yt = (y >> (t - 1)) & 1;
              q1 |= yt << (2 * (t - 1) + 1);
              q2 |= (yt ^ 1) << (2 * t);
            }
            const std::uint64_t v1 = count(m1, c, k1, flip(k1, q1, f1));
            if (v1 == 0) continue;
            total = checked_mul_add(total, v1, count(m2, c, k2, flip(k2, q2, f2)));
          }
        }
      }
    }
    store(key, total);
    return total;
  }

  std::uint64_t alternating(int n, int c) {
    const int g = first_parity_requirement(n, c);
    std::uint64_t total = 1;  // the empty ideal
    for (int K = 1; K <= std::min(n, kMaxProfileLength); ++K) {
      // Good profiles: first color g, each last color free, next first color
      // opposite to the previous last color.
      std::uint64_t level = 0;
      for (std::uint64_t lasts = 0; lasts < (std::uint64_t{1} << K); ++lasts) {
        std::uint64_t bits = 0;
        int a = g;
        for (int k = 0; k < K; ++k) {
          const int b = (lasts >> k) & 1;
          bits |= static_cast<std::uint64_t>(a | (b << 1)) << (2 * k);
          a = 1 - b;
        }
        level = checked_mul_add(level, 1, count(n, c, K, bits));
      }
      // Dropping inner diagonals keeps an ideal alternating, so once a depth
      // has no ideals no deeper one does.
      if (level == 0) break;
      total = checked_mul_add(total, 1, level);
      if (K == kMaxProfileLength && K < n) throw ResourceError("profile length limit reached");
    }
    return total;
  }
};

ProfileCounter::ProfileCounter(DpOptions options) : impl_(std::make_unique<Impl>(options)) {}
ProfileCounter::~ProfileCounter() = default;

BigInt ProfileCounter::count_by_profile(int n, int c, const Profile& profile) {
  if (n >= 64) throw DomainError("profile DP supports orders below 64");
  if (c != 0 && c != 1) throw DomainError("coloring parameter must be 0 or 1");
  return from_u64(impl_->count(n, c, profile.length(), profile.bits()));
}

BigInt ProfileCounter::alternating_count(int n, int c) {
  if (n < 1 || n >= 64) throw DomainError("alternating_count needs 1 <= n < 64");
  if (c != 0 && c != 1) throw DomainError("coloring parameter must be 0 or 1");
  return from_u64(impl_->alternating(n, c));
}

std::size_t ProfileCounter::memo_entries() const { return impl_->entries(); }

namespace {

CountSequence dp_sequence(const std::string& name, int max_n, const DpOptions& options, int parity_shift) {
  if (max_n < 0) throw DomainError("max_n must be >= 0");
  CountSequence out{name, 0, std::vector<BigInt>(max_n + 1)};
  out.terms[0] = 1;
  ProfileCounter counter(options);
  const int workers = std::max(1, std::min(options.threads, max_n));
  if (workers == 1) {
    for (int n = 1; n <= max_n; ++n) out.terms[n] = counter.alternating_count(n, (n + parity_shift) % 2);
    return out;
  }
  // Largest orders first, so the long jobs start early.
  std::atomic<int> next{max_n};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int n = next--; n >= 1; n = next--) out.terms[n] = counter.alternating_count(n, (n + parity_shift) % 2);
      } catch (...) {
        errors[w] = std::current_exception();
        next = 0;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace

CountSequence straub_sequence(int max_n, const DpOptions& options) {
  return dp_sequence("straub", max_n, options, 0);
}

CountSequence sister_sequence(int max_n, const DpOptions& options) {
  return dp_sequence("sister", max_n, options, 1);
}

BigInt sister_closed_form(int n) {
  if (n < 0) throw DomainError("sister_closed_form needs n >= 0");
  BigInt numerator;
  unsigned long m = 0;
  if (n % 2 == 0) {
    m = (n + 2) / 2;
    numerator = binomial(3 * m, m);
  } else {
    m = (n + 1) / 2;
    numerator = binomial(3 * m + 1, m + 1);
  }
  const BigInt divisor = 2 * m + 1;
  if (numerator % divisor != 0) throw ContractError("inexact division in the closed form at n=" + std::to_string(n));
  return numerator / divisor;
}

CountSequence sister_closed_form_sequence(int max_n) {
  if (max_n < 0) throw DomainError("max_n must be >= 0");
  CountSequence out{"sister", 0, {}};
  for (int n = 0; n <= max_n; ++n) out.terms.push_back(sister_closed_form(n));
  return out;
}

}  // namespace cores
