#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "freeop/comb.hpp"

using namespace freeop;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

// Brute force: walk every set partition of {0..n-1} and tally its sorted
// block-size profile.
std::map<std::vector<int>, long long> set_partition_profiles(int n) {
  std::map<std::vector<int>, long long> tally;
  std::vector<int> block_of(n, 0);
  auto place = [&](int i, int blocks, auto&& self) -> void {
    if (i == n) {
      std::vector<int> sizes(blocks, 0);
      for (int b : block_of) ++sizes[b];
      std::sort(sizes.rbegin(), sizes.rend());
      ++tally[sizes];
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block_of[i] = b;
      self(i + 1, std::max(blocks, b + 1), self);
    }
  };
  place(0, 0, place);
  return tally;
}

}  // namespace

TEST_CASE("partitions of 5 with at least two parts") {
  const auto ps = partitions(5, 2);
  CHECK(parts_of(ps) == std::vector<std::vector<int>>{{4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}});
}

TEST_CASE("partitions small cases") {
  CHECK(parts_of(partitions(1, 1)) == std::vector<std::vector<int>>{{1}});
  CHECK(parts_of(partitions(4, 2)) == std::vector<std::vector<int>>{{3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitions(0, 1).empty());
  CHECK(partitions(1, 2).empty());
  CHECK_THROWS_AS(partitions(3, 0), std::invalid_argument);
}

TEST_CASE("partitions(n,2) plus (n) is partitions(n,1)") {
  for (int n = 1; n <= 12; ++n) {
    auto with_one = parts_of(partitions(n, 1));
    auto without = parts_of(partitions(n, 2));
    without.insert(without.begin(), std::vector<int>{n});
    CHECK(with_one == without);
  }
}

TEST_CASE("Partition validation") {
  CHECK_THROWS_AS(Partition({}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  const Partition p({3, 1, 1});
  CHECK(p.n() == 5);
  CHECK(p.m() == 3);
  CHECK(p.to_string() == "(3,1,1)");
}

TEST_CASE("stabilizer orders") {
  CHECK(stabilizer_order(Partition({2, 2, 1})) == 2);
  CHECK(stabilizer_order(Partition({1, 1, 1, 1, 1})) == 120);
  CHECK(stabilizer_order(Partition({3, 2})) == 1);
  CHECK(stabilizer_order(Partition({3, 1, 1})) == 2);
  CHECK(stabilizer_order(Partition({2, 1, 1, 1})) == 6);
}

TEST_CASE("orbit counts of the n = 5 partitions") {
  CHECK(orbit_count(Partition({4, 1})) == 5);
  CHECK(orbit_count(Partition({3, 2})) == 10);
  CHECK(orbit_count(Partition({3, 1, 1})) == 10);
  CHECK(orbit_count(Partition({2, 2, 1})) == 15);
  CHECK(orbit_count(Partition({2, 1, 1, 1})) == 10);
  CHECK(orbit_count(Partition({1, 1, 1, 1, 1})) == 1);
  for (int n = 1; n <= 15; ++n) CHECK(orbit_count(Partition(std::vector<int>(n, 1))) == 1);
}

TEST_CASE("orbit_count matches set partition enumeration") {
  for (int n = 1; n <= 8; ++n) {
    const auto profiles = set_partition_profiles(n);
    long long bell = 0;
    for (const auto& p : partitions(n, 1)) {
      const auto it = profiles.find(p.parts());
      REQUIRE(it != profiles.end());
      CHECK(orbit_count(p) == it->second);
      bell += it->second;
    }
    CHECK(profiles.size() == partitions(n, 1).size());
    static const long long kBell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    CHECK(bell == kBell[n]);
  }
}

TEST_CASE("orbit * stabilizer * prod n_i! = n!") {
  for (int n = 1; n <= 20; ++n) {
    for (const auto& p : partitions(n, 1)) {
      BigInt prod = orbit_count(p) * stabilizer_order(p);
      for (int part : p.parts()) prod *= factorial(part);
      CHECK(prod == factorial(n));
    }
  }
}

TEST_CASE("factorials and binomials stay exact past 64 bits") {
  CHECK(factorial(25).str() == "15511210043330985984000000");
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(3, 5) == 0);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(-1) == 1);
}
