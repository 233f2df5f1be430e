#pragma once

#include <stdexcept>
#include <string>

namespace cores {

// Input outside an operation's domain (point not in A_n, non-coprime s,t, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller-supplied value violates a documented contract (e.g. not an order ideal).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configured memory, time, or enumeration budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cores
