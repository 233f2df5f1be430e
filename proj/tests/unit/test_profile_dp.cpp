#include <doctest.h>

#include <map>
#include <thread>

#include "cores/errors.hpp"
#include "cores/oracle.hpp"
#include "cores/profile_dp.hpp"
#include "../common/reference_data.hpp"

using namespace cores;

namespace {

std::uint64_t key_of(const Profile& p) { return p.bits() | static_cast<std::uint64_t>(p.length()) << 56; }

}  // namespace

TEST_CASE("profile formatting and flips") {
  Profile p({{1, 1}, {0, 0}, {1, 0}});
  CHECK(p.to_string() == "[[1,1],[0,0],[1,0]]");
  CHECK(Profile().to_string() == "[]");
  CHECK(p.flipped().to_string() == "[[0,0],[1,1],[0,1]]");
  CHECK(p.flipped().flipped() == p);
  CHECK(Profile::from_packed(p.length(), p.bits()) == p);
  CHECK_THROWS_AS(Profile({{2, 0}}), DomainError);
  CHECK_THROWS_AS(Profile::from_packed(1, 0b100), DomainError);
}

TEST_CASE("dp keys are structural") {
  DpKey a{5, 1, Profile({{1, 0}})};
  DpKey b{5, 1, Profile({{1, 0}})};
  DpKey c{5, 0, Profile({{1, 0}})};
  DpKey d{5, 1, Profile({{1, 0}, {0, 0}})};
  CHECK(a == b);
  CHECK(a.pack() == b.pack());
  CHECK(a.pack() != c.pack());
  CHECK(a.pack() != d.pack());
  CHECK(DpKey{5, 1, Profile({{0, 0}})}.pack() != DpKey{5, 1, Profile({{0, 0}, {0, 0}})}.pack());
}

TEST_CASE("profile of an ideal") {
  // The pictured (10,11)-core: labels 3..9, 14..18 and 25, 26.
  std::vector<long> labels;
  for (long v = 3; v <= 9; ++v) labels.push_back(v);
  for (long v = 14; v <= 18; ++v) labels.push_back(v);
  labels.push_back(25);
  labels.push_back(26);
  const auto ideal = OrderIdeal::from_labels(9, labels);
  CHECK(profile_of_ideal(9, 1, ideal).to_string() == "[[1,1],[0,0],[1,0]]");
  CHECK(ideal_to_partition(ideal).all_parts_odd());
  CHECK(profile_of_ideal(4, 0, OrderIdeal(4)).empty());
  CHECK(profile_of_ideal(2, 0, OrderIdeal::full(2)).to_string() == "[[1,0],[1,1]]");
  CHECK_THROWS_AS(profile_of_ideal(3, 0, OrderIdeal::full(2)), ContractError);
}

TEST_CASE("good profiles") {
  CHECK(is_good_profile(Profile({{1, 1}, {0, 0}, {1, 0}}), 1));
  CHECK_FALSE(is_good_profile(Profile({{1, 1}, {1, 0}}), 1));
  CHECK(is_good_profile(Profile(), 0));
  CHECK(is_good_profile(Profile(), 1));
  CHECK_FALSE(is_good_profile(Profile({{0, 1}}), 1));

  CHECK(good_profiles(0, 1).size() == 1);
  const auto one = good_profiles(1, 1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].to_string() == "[[1,0]]");
  CHECK(one[1].to_string() == "[[1,1]]");
  for (int k = 0; k <= 8; ++k) CHECK(good_profiles(k, 0).size() == (std::size_t{1} << k));
  bool found = false;
  for (const auto& p : good_profiles(3, 1)) found |= p.to_string() == "[[1,1],[0,0],[1,0]]";
  CHECK(found);
  CHECK_THROWS_AS(good_profiles(13, 1), DomainError);
}

TEST_CASE("first-parity requirement") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(first_parity_requirement(n, n % 2) == 1);
    CHECK(alternation_class(n, 0).first_color_requirement == 1);
  }
  CHECK(first_parity_requirement(2, 1) == 0);
  CHECK_THROWS_AS(alternation_class(3, 2), DomainError);
}

TEST_CASE("count_by_profile agrees with brute force for every profile") {
  ProfileCounter counter;
  for (int c : {0, 1}) {
    for (int n = 0; n <= 10; ++n) {
      std::map<std::uint64_t, std::pair<Profile, std::uint64_t>> tally;
      std::uint64_t alternating = 0;
      for_each_ideal(n, [&](const OrderIdeal& ideal) {
        if (!alternates_within_diagonals(ideal, c)) return;
        ++alternating;
        const Profile p = profile_of_ideal(n, c, ideal);
        auto& slot = tally[key_of(p)];
        slot.first = p;
        ++slot.second;
      });
      BigInt total = 0;
      for (const auto& [key, entry] : tally) {
        REQUIRE(counter.count_by_profile(n, c, entry.first) == from_u64(entry.second));
        total += counter.count_by_profile(n, c, entry.first);
      }
      CHECK(total == from_u64(alternating));
      CHECK(count_within_diagonal_alternating(n, c) == from_u64(alternating));
      CHECK(counter.count_by_profile(n, c, Profile()) == 1);
    }
  }
}

TEST_CASE("profiles that never occur count zero") {
  ProfileCounter counter;
  for (int c : {0, 1}) {
    for (int n = 0; n <= 7; ++n) {
      std::map<std::uint64_t, std::uint64_t> tally;
      for_each_ideal(n, [&](const OrderIdeal& ideal) {
        if (alternates_within_diagonals(ideal, c)) ++tally[key_of(profile_of_ideal(n, c, ideal))];
      });
      for (int k = 0; k <= std::min(n, 5); ++k) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * k)); ++bits) {
          const Profile p = Profile::from_packed(k, bits);
          auto it = tally.find(key_of(p));
          REQUIRE(counter.count_by_profile(n, c, p) == from_u64(it == tally.end() ? 0 : it->second));
        }
      }
    }
  }
}

TEST_CASE("alternating counts") {
  ProfileCounter counter;
  CHECK(counter.alternating_count(1, 1) == 2);
  CHECK(counter.alternating_count(2, 0) == 4);
  CHECK(counter.alternating_count(2, 1) == 3);
  for (int n = 1; n <= 12; ++n) {
    for (int c : {0, 1}) {
      CHECK(counter.alternating_count(n, c) == count_alternation_class(n, c));
      BigInt by_profile = 0;
      const int g = first_parity_requirement(n, c);
      for (int k = 0; k <= std::min(n, 8); ++k) {
        for (const auto& p : good_profiles(k, g)) by_profile += counter.count_by_profile(n, c, p);
      }
      CHECK(by_profile == counter.alternating_count(n, c));
    }
    CHECK(counter.alternating_count(n, n % 2) == count_filtered(n, CoreFilter::odd_parts()));
  }
  CHECK_THROWS_AS(counter.alternating_count(0, 0), DomainError);
  CHECK_THROWS_AS(counter.alternating_count(3, 2), DomainError);
  CHECK(counter.memo_entries() > 0);
}

TEST_CASE("straub and sister prefixes") {
  const auto s = straub_sequence(7);
  CHECK(s.offset == 0);
  CHECK(s.terms == std::vector<BigInt>{1, 2, 4, 7, 17, 31, 80, 152});
  const auto t = sister_sequence(7);
  CHECK(t.terms == std::vector<BigInt>{1, 2, 3, 7, 12, 30, 55, 143});
  CHECK(straub_sequence(0).terms == std::vector<BigInt>{1});
  CHECK_THROWS_AS(straub_sequence(-1), DomainError);
  const auto longer = sister_sequence(14);
  for (int n = 0; n <= 14; ++n) CHECK(longer.terms[n] == sister_closed_form(n));
}

TEST_CASE("coloring-indexed lists match except for one misprint") {
  ProfileCounter counter;
  for (int n = 1; n <= 16; ++n) {
    CHECK(counter.alternating_count(n, 0) == reference::e0[n - 1]);
    const BigInt e1 = counter.alternating_count(n, 1);
    if (n == 16) {
      CHECK(e1 == BigInt(246675));
      CHECK(reference::e1[n - 1] == BigInt(46675));
    } else {
      CHECK(e1 == reference::e1[n - 1]);
    }
  }
}

TEST_CASE("closed form") {
  CHECK(sister_closed_form(0) == 1);
  CHECK(sister_closed_form(4) == 12);
  CHECK(sister_closed_form(7) == 143);
  CHECK(sister_closed_form(22) == 50067108);
  CHECK_THROWS_AS(sister_closed_form(-1), DomainError);
  CHECK(sister_closed_form_sequence(4).terms == std::vector<BigInt>{1, 2, 3, 7, 12});
}

TEST_CASE("threads do not change results") {
  DpOptions many;
  many.threads = 4;
  CHECK(straub_sequence(13, many) == straub_sequence(13));
  CHECK(sister_sequence(13, many) == sister_sequence(13));
}

TEST_CASE("budgets") {
  DpOptions tight;
  tight.memory_budget = 1024;
  CHECK_THROWS_AS(straub_sequence(16, tight), ResourceError);
  DpOptions instant;
  instant.time_budget = 1e-9;
  CHECK_THROWS_AS(straub_sequence(16, instant), ResourceError);
}
