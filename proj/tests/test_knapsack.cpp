#include <catch2/catch_amalgamated.hpp>

#include "opskit/knapsack.hpp"
#include "support/catch_helpers.hpp"
#include "support/oracles.hpp"

using namespace opskit;

TEST_CASE("knapsack examples") {
  SECTION("zero capacity takes nothing") {
    const KnapsackResult r = knapsack_01(std::vector<KnapsackItem>{{2, 3}, {1, 1}}, 0);
    REQUIRE(r.best_value == 0.0);
    REQUIRE(r.chosen.empty());
  }
  SECTION("first two of three items") {
    const std::vector<KnapsackItem> items = {{2, 3}, {3, 4}, {4, 5}};
    const KnapsackResult r = knapsack_01(items, 5);
    REQUIRE(r.best_value == 7.0);
    REQUIRE(r.chosen == std::vector<int>{0, 1});
  }
  SECTION("no items") {
    const KnapsackResult r = knapsack_01(std::vector<KnapsackItem>{}, 10);
    REQUIRE(r.best_value == 0.0);
    REQUIRE(r.chosen.empty());
  }
  SECTION("invalid input") {
    REQUIRE(error_code_of([] { knapsack_01(std::vector<KnapsackItem>{{1, 1}}, -1); }) ==
            Errc::InvalidArgument);
    REQUIRE(error_code_of([] { knapsack_01(std::vector<KnapsackItem>{{-1, 1}}, 3); }) ==
            Errc::InvalidArgument);
    REQUIRE(error_code_of([] { knapsack_01(std::vector<KnapsackItem>{{1, -0.5}}, 3); }) ==
            Errc::InvalidArgument);
  }
}

TEST_CASE("knapsack matches exhaustive enumeration") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> item_count(0, 15);
  std::uniform_int_distribution<int> weight(0, 12);
  std::uniform_int_distribution<int> value_twice(0, 18);  // values in 0.5 steps
  std::uniform_int_distribution<int> capacity(0, 30);

  for (int trial = 0; trial < 200; ++trial) {
    std::vector<KnapsackItem> items(item_count(rng));
    for (auto& item : items) item = {weight(rng), value_twice(rng) / 2.0};
    const int cap = capacity(rng);

    const KnapsackResult r = knapsack_01(items, cap);
    REQUIRE(r.best_value == oracles::brute_knapsack_value(items, cap));

    // the chosen set re-evaluates to best_value and fits
    long long chosen_weight = 0;
    double chosen_value = 0.0;
    for (size_t i = 1; i < r.chosen.size(); ++i) REQUIRE(r.chosen[i - 1] < r.chosen[i]);
    for (int idx : r.chosen) {
      REQUIRE(idx >= 0);
      REQUIRE(idx < static_cast<int>(items.size()));
      chosen_weight += items[idx].weight;
      chosen_value += items[idx].value;
    }
    REQUIRE(chosen_weight <= cap);
    REQUIRE(chosen_value == r.best_value);
  }
}
