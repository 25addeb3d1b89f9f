#pragma once

#include <vector>

#include "circlet/rational.hpp"

namespace circlet {

struct MinCut {
  Rational weight;
  std::vector<int> side;  // 0-based vertices on one shore, sorted
};

// Stoer-Wagner global minimum cut on a symmetric nonnegative weight matrix
// (n >= 2). Exact over the rationals.
MinCut stoer_wagner_min_cut(const std::vector<std::vector<Rational>>& weights);

}  // namespace circlet
