#include "cores/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "cores/errors.hpp"
#include "cores/linear_system.hpp"
#include "cores/power_series.hpp"

namespace cores {
namespace {

void check_k(int k) {
  if (k < 1) throw DomainError("family parameter k must be >= 1");
}

void check_count(int count) {
  if (count < 0) throw DomainError("term count must be >= 0");
}

std::string family_name(const char* base, int k) { return std::string(base) + "_k" + std::to_string(k); }

}  // namespace

RepeatFamily repeat_family(int k) {
  check_k(k);
  std::vector<BigInt> base;
  for (int j = 0; j <= k; ++j) base.push_back(catalan(j));
  IntPoly p(std::move(base));
  // F = P + x P F, linear in F.
  RatFunc gf(p, IntPoly::constant(1) - p.shifted(1));
  return {k, std::move(p), std::move(gf)};
}

RatFunc repeats_gf(int k) { return repeat_family(k).gf; }

CountSequence repeats_terms(int k, int count) {
  check_count(count);
  return {family_name("repeats", k), 0, integer_coefficients(series_expand(repeats_gf(k), count))};
}

CountSequence repeats_terms_by_recurrence(int k, int count) {
  check_k(k);
  check_count(count);
  // f[n + 1] holds f_n so that f_{-1} = 1 sits at index 0.
  std::vector<BigInt> f(count + 1);
  f[0] = 1;
  std::vector<BigInt> cat;
  for (int j = 0; j <= k; ++j) cat.push_back(catalan(j));
  for (int n = 0; n < count; ++n) {
    BigInt total = 0;
    for (int j = 0; j <= std::min(k, n); ++j) total += cat[j] * f[n - j];
    f[n + 1] = total;
  }
  return {family_name("repeats", k), 0, std::vector<BigInt>(f.begin() + 1, f.end())};
}

std::uint64_t DiagonalTypeState::pack() const {
  return static_cast<std::uint64_t>(parity) | static_cast<std::uint64_t>(axis_run) << 1 |
         static_cast<std::uint64_t>(profile.length()) << 7 | profile.bits() << 12;
}

bool DiagonalTypeSystem::accepting(int state) const {
  const Profile& p = states.at(state).profile;
  return is_good_profile(p, 1);
}

namespace {

// Types of A_{n+1} ideals obtained from an A_n type by adding a new x-axis
// column. The x-axis point on relative diagonal t has label parity 1 + n t,
// and moving from A_n to A_{n+1} shifts the parity of diagonal t by t + 1.
std::vector<DiagonalTypeState> peel_successors(const DiagonalTypeState& s, int k) {
  std::vector<DiagonalTypeState> out;
  const int p = k == 1 ? 0 : 1 - s.parity;
  const int len = s.profile.length();
  for (int r = 0; r <= std::min(k, s.axis_run + 1); ++r) {
    const int length = std::max(r, len);
    if (length > k) continue;
    Profile next;
    bool ok = true;
    for (int t = 0; t < length && ok; ++t) {
      const int f = (t + 1) & 1;
      if (t < r) {
        const int pi = (1 + p * t) & 1;
        if (t < len) {
          const auto old = s.profile[t];
          if (pi == (old.first ^ f)) {
            ok = false;  // the new axis point would repeat the parity of its neighbor
          } else {
            next.push_back({pi, old.last ^ f});
          }
        } else {
          next.push_back({pi, pi});
        }
      } else {
        const auto old = s.profile[t];
        next.push_back({old.first ^ f, old.last ^ f});
      }
    }
    if (ok) out.push_back({p, r, next});
  }
  return out;
}

}  // namespace

DiagonalTypeSystem odd_diag_system(int k) {
  check_k(k);
  if (k > kMaxProfileLength) throw DomainError("k too large for the profile representation");
  DiagonalTypeSystem system;
  system.k = k;
  std::map<std::uint64_t, int> index;
  system.states.push_back({});
  index[system.states[0].pack()] = 0;
  for (std::size_t s = 0; s < system.states.size(); ++s) {
    std::vector<int> succ;
    for (const auto& next : peel_successors(system.states[s], k)) {
      auto [it, inserted] = index.try_emplace(next.pack(), static_cast<int>(system.states.size()));
      if (inserted) system.states.push_back(next);
      succ.push_back(it->second);
    }
    system.successors.push_back(std::move(succ));
  }
  return system;
}

std::vector<DiagonalTypeState> odd_diag_states(int k) { return odd_diag_system(k).states; }

std::vector<int> lump_states(const DiagonalTypeSystem& system) {
  const std::size_t n = system.states.size();
  std::vector<int> block(n);
  for (std::size_t s = 0; s < n; ++s) block[s] = system.accepting(static_cast<int>(s)) ? 1 : 0;
  std::size_t blocks = 0;
  while (true) {
    // Signature: own block plus the sorted multiset of successor blocks.
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<int> sig;
      for (int t : system.successors[s]) sig.push_back(block[t]);
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), block[s]);
      next[s] = ids.try_emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
    }
    if (ids.size() == blocks) return next;
    blocks = ids.size();
    block = std::move(next);
  }
}

RatFunc odd_diag_gf(int k) {
  const DiagonalTypeSystem system = odd_diag_system(k);
  const std::vector<int> block = lump_states(system);
  const int blocks = *std::max_element(block.begin(), block.end()) + 1;

  // V_B counts accepting endpoints reachable from B, weighted by x^steps:
  // V_B = [B accepting] + x sum_D w(B, D) V_D. Lumping makes w well defined.
  std::vector<std::map<int, long>> weight(blocks);
  std::vector<int> accepting(blocks, 0);
  std::vector<char> seen(blocks, 0);
  for (std::size_t s = 0; s < system.states.size(); ++s) {
    const int b = block[s];
    if (seen[b]) continue;
    seen[b] = 1;
    accepting[b] = system.accepting(static_cast<int>(s)) ? 1 : 0;
    for (int t : system.successors[s]) ++weight[b][block[t]];
  }

  // Tarjan's algorithm emits components with all successors already emitted.
  std::vector<int> order(blocks, -1), low(blocks, 0), component(blocks, -1);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;
  std::function<void(int)> visit = [&](int v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    for (const auto& [w, count] : weight[v]) {
      if (order[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (component[w] < 0) {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (low[v] == order[v]) {
      std::vector<int> members;
      int w = -1;
      do {
        w = stack.back();
        stack.pop_back();
        component[w] = static_cast<int>(components.size());
        members.push_back(w);
      } while (w != v);
      std::sort(members.begin(), members.end());
      components.push_back(std::move(members));
    }
  };
  for (int b = 0; b < blocks; ++b) {
    if (order[b] < 0) visit(b);
  }

  std::vector<RatFunc> value(blocks);
  for (const auto& members : components) {
    const int size = static_cast<int>(members.size());
    std::map<int, int> local;
    for (int i = 0; i < size; ++i) local[members[i]] = i;
    LinearSystem block_system;
    block_system.matrix.assign(size, std::vector<RatFunc>(size));
    for (int i = 0; i < size; ++i) {
      const int b = members[i];
      block_system.unknowns.push_back("V" + std::to_string(b));
      RatFunc known(IntPoly::constant(accepting[b]));
      long inside_self = 0;
      for (const auto& [d, w] : weight[b]) {
        if (auto it = local.find(d); it != local.end()) {
          if (it->second == i) {
            inside_self = w;
          } else {
            block_system.matrix[i][it->second] = RatFunc(IntPoly::monomial(-w, 1));
          }
        } else {
          known = known + RatFunc(IntPoly::monomial(w, 1)) * value[d];
        }
      }
      block_system.matrix[i][i] = RatFunc(IntPoly{1, -inside_self});
      block_system.rhs.push_back(known);
    }
    std::vector<RatFunc> solved;
    try {
      solved = solve_linear(block_system);
    } catch (const SingularSystemError& e) {
      throw InternalError(std::string("odd-diagonal type system is singular: ") + e.what());
    }
    for (int i = 0; i < size; ++i) value[members[i]] = solved[i];
  }
  return value[block[0]];
}

CountSequence odd_diag_terms(int k, int count) {
  check_count(count);
  return {family_name("odd_diagonals", k), 0, integer_coefficients(series_expand(odd_diag_gf(k), count))};
}

CountSequence odd_diag_terms_by_transfer(int k, int count) {
  check_count(count);
  const DiagonalTypeSystem system = odd_diag_system(k);
  std::vector<BigInt> current(system.states.size());
  current[0] = 1;
  CountSequence out{family_name("odd_diagonals", k), 0, {}};
  for (int n = 0; n < count; ++n) {
    BigInt total = 0;
    for (std::size_t s = 0; s < current.size(); ++s) {
      if (current[s] != 0 && system.accepting(static_cast<int>(s))) total += current[s];
    }
    out.terms.push_back(total);
    std::vector<BigInt> next(current.size());
    for (std::size_t s = 0; s < current.size(); ++s) {
      if (current[s] == 0) continue;
      for (int t : system.successors[s]) next[t] += current[s];
    }
    current = std::move(next);
  }
  return out;
}

}  // namespace cores
