#pragma once

// Coloring profiles: for each occupied diagonal, outermost first, the colors
// of its lowest-label and highest-label occupied points.

#include <cstdint>
#include <string>
#include <vector>

#include "cores/lattice.hpp"

namespace cores {

// Two bits per entry in one word, plus the length, keeps DP keys to 64 bits.
inline constexpr int kMaxProfileLength = 26;

struct ColorPair {
  int first = 0;
  int last = 0;

  bool operator==(const ColorPair&) const = default;
};

class Profile {
 public:
  Profile() = default;
  // Throws DomainError for colors outside {0,1} or more than kMaxProfileLength entries.
  explicit Profile(const std::vector<ColorPair>& pairs);

  // Entry k occupies bits 2k (first) and 2k+1 (last).
  static Profile from_packed(int length, std::uint64_t bits);

  int length() const { return length_; }
  bool empty() const { return length_ == 0; }
  std::uint64_t bits() const { return bits_; }
  ColorPair operator[](int k) const;
  std::vector<ColorPair> pairs() const;

  void push_back(ColorPair pair);

  // Every color complemented.
  Profile flipped() const;

  // "[[1,1],[0,0],[1,0]]"; "[]" when empty.
  std::string to_string() const;

  bool operator==(const Profile&) const = default;

 private:
  int length_ = 0;
  std::uint64_t bits_ = 0;
};

// The memo key of the profile DP: order, coloring parameter, profile.
struct DpKey {
  int n = 0;
  int c = 0;
  Profile profile;

  // Injective packing; requires 0 <= n < 64.
  std::uint64_t pack() const;
  bool operator==(const DpKey&) const = default;
};

// c together with the color the first occupied point must have.
struct AlternationClass {
  int c = 0;
  int first_color_requirement = 1;
};

// On the outer diagonal color = label + c(n-1) (mod 2), so "first label odd"
// becomes first color (1 + c(n-1)) mod 2.
int first_parity_requirement(int n, int c);
AlternationClass alternation_class(int n, int c);

// Throws ContractError if n differs from the ideal's order.
Profile profile_of_ideal(int n, int c, const OrderIdeal& ideal);

bool is_good_profile(const Profile& profile, int g);

// Every good profile of length exactly k, found by filtering all 4^k
// candidates. Throws DomainError for k > 12.
std::vector<Profile> good_profiles(int k, int g);

}  // namespace cores
