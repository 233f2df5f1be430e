#pragma once

#include <string>
#include <vector>

#include "cores/bigint.hpp"

namespace cores {

// A named integer sequence with an OEIS-style offset: terms[k] is a(offset + k).
struct CountSequence {
  std::string name;
  int offset = 0;
  std::vector<BigInt> terms;

  BigInt at(int index) const { return terms.at(static_cast<std::size_t>(index - offset)); }
  bool operator==(const CountSequence&) const = default;
};

}  // namespace cores
