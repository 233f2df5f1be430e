#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cores/errors.hpp"
#include "cores/oracle.hpp"

using namespace cores;

TEST_CASE("semigroup gaps") {
  CHECK(semigroup_gaps(3, 5).gaps == std::vector<long>{1, 2, 4, 7});
  CHECK(semigroup_gaps(1, 2).gaps.empty());
  CHECK_THROWS_AS(semigroup_gaps(4, 6), DomainError);
  CHECK_THROWS_AS(semigroup_gaps(0, 3), DomainError);
  for (int s = 1; s <= 12; ++s) {
    for (int t = 1; t <= 12; ++t) {
      if (std::gcd(s, t) != 1) continue;
      const auto gp = semigroup_gaps(s, t);
      CHECK(static_cast<long>(gp.gaps.size()) == (s - 1) * (t - 1) / 2);
      for (long y : gp.gaps) {
        bool representable = false;
        for (long a = 0; a * s <= y; ++a) representable |= (y - a * s) % t == 0;
        CHECK_FALSE(representable);
      }
    }
  }
}

TEST_CASE("hook lengths") {
  const Partition p({5, 4, 2, 1, 1});
  const auto h = hook_lengths(p);
  CHECK(h.rows[0] == std::vector<int>{9, 6, 4, 3, 1});
  CHECK(h.rows[1] == std::vector<int>{7, 4, 2, 1});
  CHECK(h.rows[2] == std::vector<int>{4, 1});
  CHECK(h.rows[3] == std::vector<int>{2});
  CHECK(h.rows[4] == std::vector<int>{1});
  CHECK(h.distinct_hooks() == std::vector<int>{1, 2, 3, 4, 6, 7, 9});
  CHECK(hook_lengths(Partition()).rows.empty());
  CHECK(is_st_core(p, 5, 8));
  CHECK_FALSE(is_st_core(p, 9, 11));
  CHECK(is_st_core(Partition(), 2, 3));
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
}

TEST_CASE("partition basics") {
  const Partition p({4, 2, 1, 1});
  CHECK(p.size() == 8);
  CHECK(p.conjugate() == Partition({4, 2, 1, 1}).conjugate());
  CHECK(p.conjugate().conjugate() == p);
  CHECK(p.conjugate().to_string() == "(4,2,1,1)");
  CHECK(Partition({3, 1}).conjugate().to_string() == "(2,1,1)");
  CHECK(p.max_multiplicity() == 2);
  CHECK_FALSE(p.has_distinct_parts());
  CHECK_FALSE(p.all_parts_odd());
  CHECK(Partition({5, 3, 1}).all_parts_odd());
  CHECK(Partition().compact() == "empty");
  std::vector<long> dup{3, 3};
  CHECK_THROWS_AS(Partition::from_first_column_hooks(dup), DomainError);
}

TEST_CASE("(s,t)-core enumeration") {
  std::vector<std::string> names;
  for (const auto& p : enumerate_st_cores(3, 5)) names.push_back(p.compact());
  std::sort(names.begin(), names.end());
  std::vector<std::string> expected{"1", "11", "2", "211", "31", "4211", "empty"};
  std::sort(expected.begin(), expected.end());
  CHECK(names == expected);
  CHECK(enumerate_st_cores(2, 3).size() == 2);
  CHECK(enumerate_st_cores(1, 2).size() == 1);
  CHECK_THROWS_AS(enumerate_st_cores(2, 4), DomainError);
  CHECK_THROWS_AS(enumerate_st_cores(8, 9, 100), ResourceError);

  for (int s = 1; s <= 9; ++s) {
    for (int t = s + 1; t <= 9; ++t) {
      if (std::gcd(s, t) != 1) continue;
      const auto all = enumerate_st_cores(s, t);
      CHECK(BigInt(static_cast<unsigned long>(all.size())) == anderson_count(s, t));
      for (const auto& p : all) REQUIRE(is_st_core(p, s, t));
      CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    }
  }
}

TEST_CASE("gap-poset and lattice enumerations give the same cores") {
  for (int n = 0; n <= 12; ++n) {
    std::vector<Partition> from_lattice;
    for_each_ideal(n, [&](const OrderIdeal& ideal) { from_lattice.push_back(ideal_to_partition(ideal)); });
    std::sort(from_lattice.begin(), from_lattice.end());
    CHECK(from_lattice == enumerate_st_cores(n + 1, n + 2));
  }
}

TEST_CASE("filtered counts") {
  CHECK(count_filtered(2, CoreFilter::odd_parts()) == 4);
  CHECK(count_filtered(5, CoreFilter::distinct_parts()) == 13);
  CHECK(count_filtered(4, CoreFilter::all()) == 42);
  CHECK(count_filtered(0, CoreFilter::all()) == 1);
  for (int n = 0; n <= 14; ++n) CHECK(count_filtered(n, CoreFilter::distinct_parts()) == fibonacci(n + 2));
  for (int n = 0; n <= 12; ++n) {
    CHECK(count_filtered(n, CoreFilter::odd_parts() && CoreFilter::diagonals_at_most((n + 1) / 2 + 1)) ==
          count_filtered(n, CoreFilter::odd_parts()));
    CHECK(count_filtered(n, CoreFilter::repeats_at_most(1)) == count_filtered(n, CoreFilter::distinct_parts()));
  }
  CHECK_THROWS_AS(count_filtered(20, CoreFilter::all()), ResourceError);
  CHECK_THROWS_AS(CoreFilter::repeats_at_most(0), DomainError);
}

TEST_CASE("enumeration visits every ideal once") {
  for (int n = 0; n <= 9; ++n) {
    std::set<std::vector<long>> seen;
    for_each_ideal(n, [&](const OrderIdeal& ideal) { seen.insert(ideal.labels()); });
    CHECK(BigInt(static_cast<unsigned long>(seen.size())) == catalan(n + 1));
  }
}

TEST_CASE("alternation predicates") {
  // Reading-order alternation with an odd start is the odd-parts condition when c = n mod 2.
  for (int n = 1; n <= 10; ++n) {
    for_each_ideal(n, [&](const OrderIdeal& ideal) {
      REQUIRE(in_alternation_class(ideal, n % 2) == ideal_to_partition(ideal).all_parts_odd());
      for (int c : {0, 1}) {
        if (in_alternation_class(ideal, c)) REQUIRE(alternates_within_diagonals(ideal, c));
      }
    });
  }
  CHECK(count_alternation_class(2, 1) == 3);
  CHECK(count_alternation_class(2, 0) == 4);
  CHECK(count_alternation_class(1, 1) == 2);
}

TEST_CASE("distinct-parts cores with (2m-1, 2m+1) form consecutive powers of four") {
  std::vector<BigInt> counts;
  for (int m = 2; m <= 4; ++m) {
    BigInt c = 0;
    for (const auto& p : enumerate_st_cores(2 * m - 1, 2 * m + 1)) c += p.has_distinct_parts() ? 1 : 0;
    counts.push_back(c);
  }
  CHECK(counts[1] == 4 * counts[0]);
  CHECK(counts[2] == 4 * counts[1]);
  BigInt power = 1;
  while (power < counts[0]) power *= 4;
  CHECK(power == counts[0]);
}
