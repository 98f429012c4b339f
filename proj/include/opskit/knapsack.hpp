#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "opskit/error.hpp"

namespace opskit {

struct KnapsackItem {
  int weight = 0;     // nonnegative integer
  double value = 0.0; // nonnegative

  friend bool operator==(const KnapsackItem&, const KnapsackItem&) = default;
};

struct KnapsackResult {
  double best_value = 0.0;
  std::vector<int> chosen;  // 0-based item indices, ascending
};

// Classic 0/1 dynamic program over capacity. An item is taken only when it is
// strictly better than leaving it out, which makes the chosen set
// deterministic on value ties.
inline KnapsackResult knapsack_01(std::span<const KnapsackItem> items, int capacity) {
  if (capacity < 0) fail(Errc::InvalidArgument, "capacity must be >= 0");
  for (const KnapsackItem& it : items)
    if (it.weight < 0 || !(it.value >= 0.0) || !std::isfinite(it.value))
      fail(Errc::InvalidArgument, "item weights and values must be nonnegative");

  const int k = static_cast<int>(items.size());
  const int width = capacity + 1;
  std::vector<double> best(width, 0.0);
  std::vector<char> take(static_cast<size_t>(k) * width, 0);

  for (int i = 0; i < k; ++i) {
    const int w = items[i].weight;
    const double v = items[i].value;
    for (int c = capacity; c >= w; --c) {
      const double with_item = best[c - w] + v;
      if (with_item > best[c]) {
        best[c] = with_item;
        take[static_cast<size_t>(i) * width + c] = 1;
      }
    }
  }

  KnapsackResult result;
  result.best_value = best[capacity];
  int c = capacity;
  for (int i = k - 1; i >= 0; --i)
    if (take[static_cast<size_t>(i) * width + c]) {
      result.chosen.push_back(i);
      c -= items[i].weight;
    }
  std::reverse(result.chosen.begin(), result.chosen.end());
  return result;
}

}  // namespace opskit
