#pragma once

// Rational generating functions for two restricted families of
// (n+1, n+2)-cores: parts repeated at most k times, and odd parts whose
// ideal lives in the k outermost diagonals.

#include <cstdint>
#include <vector>

#include "cores/poly.hpp"
#include "cores/profile.hpp"
#include "cores/ratfunc.hpp"
#include "cores/sequence.hpp"

namespace cores {

struct RepeatFamily {
  int k = 1;
  IntPoly base_polynomial;  // sum_{j<=k} Catalan(j) x^j
  RatFunc gf;               // P_k / (1 - x P_k)
};

// Throws DomainError for k < 1.
RepeatFamily repeat_family(int k);
RatFunc repeats_gf(int k);

// Coefficients 0..count-1 of repeats_gf(k).
CountSequence repeats_terms(int k, int count);
// The same numbers from f_n = sum_{j=0}^{min(k,n)} Catalan(j) f_{n-j-1}, f_{-1} = 1.
CountSequence repeats_terms_by_recurrence(int k, int count);

// Type of an ideal confined to the k outermost diagonals, read after peeling
// the x-axis: the order's parity (irrelevant and fixed at 0 when k = 1), the
// number of occupied x-axis points, and the label-parity profile.
struct DiagonalTypeState {
  int parity = 0;
  int axis_run = 0;
  Profile profile;

  std::uint64_t pack() const;
  bool operator==(const DiagonalTypeState&) const = default;
};

// The closed state space reachable from the empty lattice, in discovery order
// (index 0 is the start), with successor lists taking A_n types to A_{n+1} types.
struct DiagonalTypeSystem {
  int k = 1;
  std::vector<DiagonalTypeState> states;
  std::vector<std::vector<int>> successors;

  // Profile good with an odd first label.
  bool accepting(int state) const;
};

DiagonalTypeSystem odd_diag_system(int k);
std::vector<DiagonalTypeState> odd_diag_states(int k);

// Coarsest partition of the states that respects acceptance and successor
// counts per block; returns the block of every state.
std::vector<int> lump_states(const DiagonalTypeSystem& system);

RatFunc odd_diag_gf(int k);
CountSequence odd_diag_terms(int k, int count);
// Path counting in the state graph, independent of the linear solve.
CountSequence odd_diag_terms_by_transfer(int k, int count);

}  // namespace cores
