#pragma once

// Published reference values used by the unit and acceptance tests.

#include <vector>

#include "cores/bigint.hpp"
#include "cores/poly.hpp"
#include "cores/ratfunc.hpp"

namespace reference {

inline std::vector<cores::BigInt> big(std::initializer_list<long> values) {
  std::vector<cores::BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline const std::vector<cores::BigInt> straub = big(
    {1, 2, 4, 7, 17, 31, 80, 152, 404, 790, 2140, 4271, 11729, 23767, 65952, 135221, 378321, 782968, 2205168,
     4598804, 13023324, 27332956, 77761008});

inline const std::vector<cores::BigInt> sister = big(
    {1, 2, 3, 7, 12, 30, 55, 143, 273, 728, 1428, 3876, 7752, 21318, 43263, 120175, 246675, 690690, 1430715,
     4032015, 8414640, 23841480, 50067108});

// e^(0)_n and e^(1)_n for n = 1, 2, ...; the second list carries a dropped
// leading digit at n = 16 (46675 for 246675).
inline const std::vector<cores::BigInt> e0 = big(
    {2, 4, 7, 17, 30, 80, 143, 404, 728, 2140, 3876, 11729, 21318, 65952, 120175, 378321, 690690, 2205168,
     4032015, 13023324, 23841480, 77761008, 142498692});
inline const std::vector<cores::BigInt> e1 = big(
    {2, 3, 7, 12, 31, 55, 152, 273, 790, 1428, 4271, 7752, 23767, 43263, 135221, 46675, 782968, 1430715,
     4598804, 8414640, 27332956, 50067108, 164081764});

inline const std::vector<cores::BigInt> repeats_k2 = big(
    {1, 2, 5, 9, 18, 37, 73, 146, 293, 585, 1170, 2341, 4681, 9362, 18725, 37449});
inline const std::vector<cores::BigInt> repeats_k3 = big(
    {1, 2, 5, 14, 28, 62, 143, 331, 738, 1665, 3780, 8576, 19376, 43837, 99265, 224734});
inline const std::vector<cores::BigInt> repeats_k4 = big(
    {1, 2, 5, 14, 42, 90, 213, 527, 1326, 3317, 8022, 19608, 48272, 119073, 293109, 719074, 1766201, 4342666,
     10679582, 26253546, 64516501, 158569355, 389788182});

inline const std::vector<cores::BigInt> odd_diag_k2 = big(
    {1, 2, 4, 7, 15, 27, 56, 104, 210, 398, 791, 1517, 2988, 5769, 11306, 21911, 42820, 83160, 162261, 315496,
     615050, 1196676, 2331733, 4538426, 8840719});
inline const std::vector<cores::BigInt> odd_diag_k3 = big(
    {1, 2, 4, 7, 17, 31, 76, 144, 344, 670, 1560, 3103, 7079, 14315, 32152, 65861, 146183, 302456, 665300,
     1387172, 3030464, 6356068, 13813464, 29103412, 62999146});

// Generating functions exactly as displayed, including their overall minus sign.
inline cores::RatFunc repeats_gf_k2() {
  return {-cores::IntPoly{1, 1, 2}, cores::IntPoly{-1, 1, 1, 2}};
}
inline cores::RatFunc repeats_gf_k3() {
  return {-cores::IntPoly{1, 1, 2, 5}, cores::IntPoly{-1, 1, 1, 2, 5}};
}
inline cores::RatFunc repeats_gf_k4() {
  return {-cores::IntPoly{1, 1, 2, 5, 14}, cores::IntPoly{-1, 1, 1, 2, 5, 14}};
}
inline cores::RatFunc odd_diag_gf_k2() {
  return {-cores::IntPoly{1, 1, -1, -1, 1}, cores::IntPoly{-1, 1, 3, -2, -1, 1}};
}
inline cores::RatFunc odd_diag_gf_k3() {
  const cores::IntPoly num{1, 1, -5, -5, 9, 8, -6, -4, 1, 1};
  const cores::IntPoly den_a{1, 0, -7, -1, 14, 3, -9, -3, 2, 1};
  const cores::IntPoly den_b{-1, 1};
  return {-num, den_a * den_b};
}

inline const cores::RatFunc fibonacci_gf() { return {cores::IntPoly{1, 1}, cores::IntPoly{1, -1, -1}}; }

}  // namespace reference
