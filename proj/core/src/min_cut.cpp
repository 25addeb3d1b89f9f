#include "circlet/min_cut.hpp"

#include <algorithm>

#include "circlet/errors.hpp"

namespace circlet {

MinCut stoer_wagner_min_cut(const std::vector<std::vector<Rational>>& weights) {
  const int n = static_cast<int>(weights.size());
  if (n < 2) throw DomainError("a cut needs at least two vertices");
  std::vector<std::vector<Rational>> w = weights;
  std::vector<std::vector<int>> members(n);
  for (int v = 0; v < n; ++v) members[v] = {v};
  std::vector<bool> merged(n, false);

  MinCut best;
  bool have_best = false;
  for (int phase = n; phase > 1; --phase) {
    std::vector<bool> added(n, false);
    std::vector<Rational> key(n);
    int prev = -1, last = -1;
    for (int step = 0; step < phase; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v)
        if (!merged[v] && !added[v] && (pick < 0 || key[v] > key[pick])) pick = v;
      added[pick] = true;
      prev = last;
      last = pick;
      for (int v = 0; v < n; ++v)
        if (!merged[v] && !added[v]) key[v] += w[pick][v];
    }
    if (!have_best || key[last] < best.weight) {
      have_best = true;
      best.weight = key[last];
      best.side = members[last];
    }
    members[prev].insert(members[prev].end(), members[last].begin(),
                         members[last].end());
    for (int v = 0; v < n; ++v) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0;
    merged[last] = true;
  }
  std::sort(best.side.begin(), best.side.end());
  return best;
}

}  // namespace circlet
