#include "cores/profile.hpp"

#include <bit>
#include <string>

#include "cores/errors.hpp"

namespace cores {

Profile::Profile(const std::vector<ColorPair>& pairs) {
  for (const auto& pair : pairs) push_back(pair);
}

Profile Profile::from_packed(int length, std::uint64_t bits) {
  if (length < 0 || length > kMaxProfileLength) throw DomainError("profile length out of range");
  if (length < 32 && (bits >> (2 * length)) != 0) throw DomainError("profile bits beyond its length");
  Profile p;
  p.length_ = length;
  p.bits_ = bits;
  return p;
}

ColorPair Profile::operator[](int k) const {
  if (k < 0 || k >= length_) throw DomainError("profile index out of range");
  return {static_cast<int>((bits_ >> (2 * k)) & 1), static_cast<int>((bits_ >> (2 * k + 1)) & 1)};
}

std::vector<ColorPair> Profile::pairs() const {
  std::vector<ColorPair> out;
  for (int k = 0; k < length_; ++k) out.push_back((*this)[k]);
  return out;
}

void Profile::push_back(ColorPair pair) {
  if ((pair.first | pair.last) & ~1) throw DomainError("profile colors must be 0 or 1");
  if (length_ == kMaxProfileLength) throw DomainError("profile longer than supported");
  bits_ |= static_cast<std::uint64_t>(pair.first | (pair.last << 1)) << (2 * length_);
  ++length_;
}

Profile Profile::flipped() const {
  Profile p = *this;
  p.bits_ ^= (std::uint64_t{1} << (2 * length_)) - 1;
  return p;
}

std::string Profile::to_string() const {
  std::string out = "[";
  for (int k = 0; k < length_; ++k) {
    const auto pair = (*this)[k];
    if (k) out += ",";
    out += "[" + std::to_string(pair.first) + "," + std::to_string(pair.last) + "]";
  }
  return out + "]";
}

std::uint64_t DpKey::pack() const {
  if (n < 0 || n >= 64 || (c & ~1)) throw DomainError("DP key out of range");
  return static_cast<std::uint64_t>(n) | static_cast<std::uint64_t>(c) << 6 |
         static_cast<std::uint64_t>(profile.length()) << 7 | profile.bits() << 12;
}

int first_parity_requirement(int n, int c) { return (1 + c * (n - 1)) & 1; }

AlternationClass alternation_class(int n, int c) {
  if (c != 0 && c != 1) throw DomainError("coloring parameter must be 0 or 1");
  return {c, first_parity_requirement(n, c)};
}

Profile profile_of_ideal(int n, int c, const OrderIdeal& ideal) {
  if (ideal.order() != n) throw ContractError("ideal belongs to a different lattice");
  Profile out;
  for (int t = 0; t < ideal.diagonal_count(); ++t) {
    const auto mask = ideal.diagonal(t);
    if (mask == 0) break;
    const int d = n - 1 - t;
    const int lo = std::countr_zero(mask);
    const int hi = 63 - std::countl_zero(mask);
    out.push_back({color(c, {d - lo, lo}), color(c, {d - hi, hi})});
  }
  return out;
}

bool is_good_profile(const Profile& profile, int g) {
  if (profile.empty()) return true;
  if (profile[0].first != g) return false;
  for (int k = 1; k < profile.length(); ++k) {
    if (profile[k - 1].last == profile[k].first) return false;
  }
  return true;
}

std::vector<Profile> good_profiles(int k, int g) {
  if (k < 0 || k > 12) throw DomainError("good_profiles supports 0 <= k <= 12");
  std::vector<Profile> out;
  const std::uint64_t total = std::uint64_t{1} << (2 * k);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    auto p = Profile::from_packed(k, bits);
    if (is_good_profile(p, g)) out.push_back(p);
  }
  return out;
}

}  // namespace cores
