#include <doctest.h>

#include <numeric>

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/symmetric_group.hpp"
#include "support/oracles.hpp"

using namespace hurwitz;

TEST_SUITE("partitions") {
  TEST_CASE("construction rejects non-partitions") {
    CHECK_THROWS_AS(Partition({1, 2}), ArgumentError);
    CHECK_THROWS_AS(Partition({2, 0}), ArgumentError);
    CHECK_THROWS_AS(Partition({-1}), ArgumentError);
    CHECK_NOTHROW(Partition({3, 3, 1}));
  }

  TEST_CASE("parse and serialize") {
    CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition{3, 1, 1}.to_string() == "3,1,1");
    CHECK(Partition{}.to_string().empty());
    CHECK_THROWS_AS(Partition::parse("1,2"), ArgumentError);
    CHECK_THROWS_AS(Partition::parse("2,,1"), ArgumentError);
    CHECK_THROWS_AS(Partition::parse("2,0"), ArgumentError);
    CHECK_THROWS_AS(Partition::parse("a"), ArgumentError);
    CHECK_THROWS_AS(Partition::parse("2,1,"), ArgumentError);
  }

  TEST_CASE("weight, length, conjugate") {
    Partition p{4, 2, 2, 1};
    CHECK(p.weight() == 9);
    CHECK(p.length() == 4);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.conjugate() == Partition{4, 3, 1, 1});
    CHECK(p.conjugate().conjugate() == p);
  }

  TEST_CASE("colength") {
    CHECK(colength({1, 1, 1}) == 0);
    CHECK(colength({2, 1}) == 1);
    CHECK(colength({4}) == 3);
    for (int n = 1; n <= 7; ++n)
      for (const auto& mu : enumerate_partitions(n)) {
        std::vector<int> parts(mu.parts().begin(), mu.parts().end());
        parts.push_back(1);
        CHECK(colength(Partition(parts)) == colength(mu));
      }
  }

  TEST_CASE("colength of a 4-cycle is its minimal transposition length") {
    // Breadth-first search over S_4 from the identity by transpositions.
    const auto& group = SymmetricGroup::get(4);
    std::vector<int> dist(group.order(), -1);
    std::vector<SymmetricGroup::Element> frontier{group.identity()};
    dist[group.identity()] = 0;
    for (int step = 1; !frontier.empty(); ++step) {
      std::vector<SymmetricGroup::Element> next;
      for (auto x : frontier)
        for (int a = 1; a <= 4; ++a)
          for (int b = a + 1; b <= 4; ++b) {
            auto y = group.multiply(group.transposition(a, b), x);
            if (dist[y] < 0) {
              dist[y] = step;
              next.push_back(y);
            }
          }
      frontier = next;
    }
    for (std::size_t x = 0; x < group.order(); ++x)
      CHECK(dist[x] == colength(cycle_type(group.permutation(static_cast<SymmetricGroup::Element>(x)))));
  }

  TEST_CASE("enumeration order and counts") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(8).size() == 22);
    const auto counts = oracle::partition_counts(kMaxPartitionDegree);
    for (int n = 0; n <= 10; ++n) CHECK(enumerate_partitions(n).size() == counts[n]);
    CHECK(enumerate_partitions(kMaxPartitionDegree).size() == counts[kMaxPartitionDegree]);
    CHECK_THROWS_AS(enumerate_partitions(kMaxPartitionDegree + 1), CapacityError);
    CHECK_THROWS_AS(enumerate_partitions(-1), ArgumentError);
  }

  TEST_CASE("enumeration is strictly descending and canonical_index inverts it") {
    for (int n = 1; n <= 12; ++n) {
      const auto parts = enumerate_partitions(n);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        CHECK(parts[i].weight() == n);
        CHECK(canonical_index(parts[i]) == i);
        if (i > 0) CHECK(parts[i - 1] > parts[i]);
      }
    }
  }

  TEST_CASE("partitions with colength") {
    CHECK(partitions_with_colength(3, 1) == std::vector<Partition>{{2, 1}});
    CHECK(partitions_with_colength(3, 2) == std::vector<Partition>{{3}});
    CHECK(partitions_with_colength(2, 5).empty());
    CHECK(partitions_with_colength(4, 2) == std::vector<Partition>{{3, 1}, {2, 2}});
  }

  TEST_CASE("z_mu") {
    CHECK(z_mu({1, 1, 1}) == 6);
    CHECK(z_mu({2, 1}) == 2);
    CHECK(z_mu({2, 2}) == 8);
    for (int n = 1; n <= 8; ++n) {
      const auto sizes = oracle::class_sizes(n);
      for (const auto& mu : enumerate_partitions(n)) {
        std::vector<int> key(mu.parts().begin(), mu.parts().end());
        CHECK(factorial(n) / z_mu(mu) == sizes.at(key));
      }
    }
  }

  TEST_CASE("hook products") {
    CHECK(hook_product({1}) == 1);
    CHECK(hook_product({5}) == 120);
    CHECK(hook_product({2, 1}) == 3);
    for (int n = 1; n <= 8; ++n) {
      Integer sum = 0;
      for (const auto& l : enumerate_partitions(n)) {
        Integer dim = factorial(n) / hook_product(l);
        CHECK(dim * hook_product(l) == factorial(n));
        sum += dim * dim;
      }
      CHECK(sum == factorial(n));
    }
  }

  TEST_CASE("contents") {
    CHECK(contents({}).empty());
    auto sorted = [](std::vector<int> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(sorted(contents({2})) == std::vector<int>{0, 1});
    CHECK(sorted(contents({2, 1})) == std::vector<int>{-1, 0, 1});
    for (int n = 1; n <= 9; ++n)
      for (const auto& l : enumerate_partitions(n)) {
        auto c = contents(l);
        CHECK(static_cast<int>(c.size()) == n);
        int expected_twice = 0;
        for (int i = 0; i < l.length(); ++i) expected_twice += l[i] * (l[i] - 2 * (i + 1) + 1);
        CHECK(2 * std::accumulate(c.begin(), c.end(), 0) == expected_twice);
      }
  }

  TEST_CASE("genus from Riemann-Hurwitz") {
    CHECK(genus_from_data(1, {1, 1}, {2}) == 0);
    CHECK_FALSE(genus_from_data(2, {1, 1}, {2}).has_value());
    CHECK(genus_from_data(0, {1}, {1}) == 0);
    CHECK(genus_from_data(4, {1, 1}, {1, 1}) == 1);
    CHECK_FALSE(genus_from_data(0, {1, 1}, {2}).has_value());
    CHECK_THROWS_AS(genus_from_data(1, {2}, {1}), ArgumentError);
  }
}
