#include "circlet/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <thread>

#include "circlet/errors.hpp"

namespace circlet {
namespace {

void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw BudgetExceededError(std::string(what) + " at n=" + std::to_string(n) +
                              " exceeds the cap " + std::to_string(cap));
}

// Depth-first walk over canonical visit sequences starting at 1, with the
// second vertex fixed and the last vertex required to exceed it.
class TourWalker {
 public:
  TourWalker(int n, Vertex second) : n_(n), order_(n), used_(n + 1, false) {
    order_[0] = 1;
    order_[1] = second;
    used_[1] = used_[second] = true;
  }

  template <typename Visit>
  void run(Visit&& visit) {
    step(2, visit);
  }

  const std::vector<Vertex>& order() const { return order_; }

 private:
  template <typename Visit>
  void step(int pos, Visit& visit) {
    if (pos == n_) {
      visit(order_);
      return;
    }
    for (Vertex v = 2; v <= n_; ++v) {
      if (used_[v] || (pos == n_ - 1 && v < order_[1])) continue;
      order_[pos] = v;
      used_[v] = true;
      step(pos + 1, visit);
      used_[v] = false;
    }
  }

  int n_;
  std::vector<Vertex> order_;
  std::vector<bool> used_;
};

}  // namespace

long long for_each_tour(const Instance& inst, const TourVisitor& visit,
                        const Caps& caps) {
  const int n = inst.n();
  check_cap(n, caps.enumeration, "tour enumeration");
  long long count = 0;
  for (Vertex second = 2; second < n; ++second) {
    TourWalker walker(n, second);
    walker.run([&](const std::vector<Vertex>& order) {
      ++count;
      visit(order);
    });
  }
  return count;
}

std::vector<Tour> enumerate_tours(const Instance& inst, const Caps& caps) {
  std::vector<Tour> tours;
  for_each_tour(
      inst, [&](std::span<const Vertex> order) {
        tours.emplace_back(std::vector<Vertex>(order.begin(), order.end()));
      },
      caps);
  return tours;
}

namespace {

struct PartialScan {
  long long tours = 0;
  bool found = false;
  long min_cost = 0;
  long long argmin_count = 0;
};

// Enumerates the tours whose second vertex is `second`, pruning partial paths
// that are already worse than the best complete tour when costs are
// nonnegative. Pruned tours are still counted.
class CostScan {
 public:
  CostScan(const Instance& inst, std::span<const long> cost)
      : n_(inst.n()), order_(n_), used_(n_ + 1, false) {
    nonnegative_ = std::all_of(cost.begin(), cost.end(), [](long c) { return c >= 0; });
    c_.assign((n_ + 1) * (n_ + 1), 0);
    for (Vertex a = 1; a <= n_; ++a)
      for (Vertex b = 1; b <= n_; ++b)
        if (a != b) c_[a * (n_ + 1) + b] = cost[edge_length(inst, a, b) - 1];
    // completions[r] = number of canonical completions with r free slots
    // after position 2, ignoring the last-vertex constraint: r!.
    fact_.assign(n_ + 1, 1);
    for (int i = 1; i <= n_; ++i) fact_[i] = fact_[i - 1] * i;
  }

  PartialScan run(Vertex second) {
    result_ = {};
    order_[0] = 1;
    order_[1] = second;
    used_[1] = used_[second] = true;
    step(2, cost(1, second));
    used_[second] = false;
    return result_;
  }

 private:
  long cost(Vertex a, Vertex b) const { return c_[a * (n_ + 1) + b]; }

  // Tours below this prefix: permutations of the free vertices whose last
  // element exceeds order_[1].
  long long completions(int pos) const {
    const int free = n_ - pos;
    if (free == 0) return 1;
    int above = 0;
    for (Vertex v = order_[1] + 1; v <= n_; ++v)
      if (!used_[v]) ++above;
    return above * fact_[free - 1];
  }

  void step(int pos, long partial) {
    if (nonnegative_ && result_.found && partial > result_.min_cost) {
      result_.tours += completions(pos);
      return;
    }
    if (pos == n_) {
      const long total = partial + cost(order_[n_ - 1], 1);
      ++result_.tours;
      if (!result_.found || total < result_.min_cost) {
        result_.found = true;
        result_.min_cost = total;
        result_.argmin_count = 1;
      } else if (total == result_.min_cost) {
        ++result_.argmin_count;
      }
      return;
    }
    for (Vertex v = 2; v <= n_; ++v) {
      if (used_[v] || (pos == n_ - 1 && v < order_[1])) continue;
      order_[pos] = v;
      used_[v] = true;
      step(pos + 1, partial + cost(order_[pos - 1], v));
      used_[v] = false;
    }
  }

  int n_;
  bool nonnegative_ = true;
  std::vector<long> c_;
  std::vector<long long> fact_;
  std::vector<Vertex> order_;
  std::vector<bool> used_;
  PartialScan result_;
};

}  // namespace

ExhaustiveScan exhaustive_min_cost(const Instance& inst,
                                   std::span<const long> cost_per_length,
                                   const Caps& caps, int threads) {
  const int n = inst.n();
  check_cap(n, caps.enumeration, "tour enumeration");
  if (static_cast<int>(cost_per_length.size()) != inst.d())
    throw DimensionMismatchError("cost vector needs d entries");

  std::vector<PartialScan> parts(n + 1);
  auto work = [&](int first, int stride) {
    CostScan scan(inst, cost_per_length);
    for (Vertex second = first; second < n; second += stride)
      parts[second] = scan.run(second);
  };
  const int workers = std::max(1, std::min(threads, n - 2));
  if (workers == 1) {
    work(2, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work, 2 + t, workers);
    for (auto& th : pool) th.join();
  }

  ExhaustiveScan out;
  bool found = false;
  for (Vertex s = 2; s < n; ++s) {
    const auto& p = parts[s];
    out.tours += p.tours;
    if (!p.found) continue;
    if (!found || p.min_cost < out.min_cost) {
      found = true;
      out.min_cost = p.min_cost;
      out.argmin_count = p.argmin_count;
    } else if (p.min_cost == out.min_cost) {
      out.argmin_count += p.argmin_count;
    }
  }
  return out;
}

namespace {

template <typename T>
T held_karp(int n, const std::vector<long>& cost_of_gap_length,
            const Instance& inst) {
  // Vertex 0 is the fixed start; subsets range over vertices 1..n-1.
  const int m = n - 1;
  const std::size_t states = std::size_t{1} << m;
  const T inf = std::numeric_limits<T>::max() / 2;
  std::vector<T> c(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      c[a * n + b] = a == b ? 0 : static_cast<T>(
                                      cost_of_gap_length[edge_length(inst, a + 1, b + 1) - 1]);

  std::vector<T> dp(states * m, inf);
  for (int j = 0; j < m; ++j) dp[(std::size_t{1} << j) * m + j] = c[j + 1];
  for (std::size_t mask = 1; mask < states; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (!(mask >> j & 1)) continue;
      const std::size_t prev = mask ^ (std::size_t{1} << j);
      const T* row = &dp[prev * m];
      T best = inf;
      for (int i = 0; i < m; ++i) {
        if (!(prev >> i & 1) || row[i] >= inf) continue;
        const T cand = row[i] + c[(i + 1) * n + (j + 1)];
        if (cand < best) best = cand;
      }
      dp[mask * m + j] = best;
    }
  }
  T best = inf;
  const std::size_t full = states - 1;
  for (int j = 0; j < m; ++j)
    best = std::min<T>(best, dp[full * m + j] + c[(j + 1) * n]);
  return best;
}

}  // namespace

Rational min_tour_cost(const Instance& inst,
                       std::span<const Rational> cost_per_length,
                       const Caps& caps) {
  const int n = inst.n();
  check_cap(n, caps.dp, "Held-Karp");
  if (static_cast<int>(cost_per_length.size()) != inst.d())
    throw DimensionMismatchError("cost vector needs d entries");

  BigInt scale = 1;
  for (const auto& c : cost_per_length)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
  BigInt max_abs = 0;
  std::vector<BigInt> scaled;
  for (const auto& c : cost_per_length) {
    scaled.push_back(c.get_num() * (scale / c.get_den()));
    if (abs(scaled.back()) > max_abs) max_abs = abs(scaled.back());
  }
  // Partial sums stay below n * max_abs; keep a factor of 4 of headroom under
  // the type's half-range sentinel.
  const BigInt span_needed = max_abs * n * 4;
  std::vector<long> ints;
  auto finish = [&](const BigInt& v) {
    Rational r(v, scale);
    r.canonicalize();
    return r;
  };
  if (!span_needed.fits_slong_p())
    throw DomainError("tour costs too large for Held-Karp");
  for (const auto& s : scaled) ints.push_back(s.get_si());
  if (span_needed < BigInt(std::numeric_limits<int>::max() / 2))
    return finish(BigInt(static_cast<long>(held_karp<int>(n, ints, inst))));
  return finish(BigInt(static_cast<long>(held_karp<long>(n, ints, inst))));
}

std::vector<std::vector<long>> el_points(const Instance& inst, const Caps& caps) {
  std::set<std::vector<long>> points;
  for_each_tour(
      inst,
      [&](std::span<const Vertex> order) {
        points.insert(integer_length_profile(inst, order));
      },
      caps);
  return {points.begin(), points.end()};
}

int LengthMultiset::size() const {
  int s = 0;
  for (int c : counts) s += c;
  return s;
}

LengthMultiset LengthMultiset::from_lengths(const Instance& inst,
                                            std::span<const int> lengths) {
  LengthMultiset out;
  out.counts.assign(inst.d(), 0);
  for (int l : lengths) {
    if (l < 1 || l > inst.d())
      throw DomainError("edge length " + std::to_string(l) + " outside [1, " +
                        std::to_string(inst.d()) + "]");
    ++out.counts[l - 1];
  }
  return out;
}

BurattiResult buratti_condition(const Instance& inst, const LengthMultiset& L) {
  const int n = inst.n();
  if (L.size() != n - 1)
    throw DomainError("the condition applies to multisets of size n-1=" +
                      std::to_string(n - 1) + ", got " + std::to_string(L.size()));
  for (int q = 1; q <= n; ++q) {
    if (n % q != 0) continue;
    int divisible = 0;
    for (int l = 1; l <= static_cast<int>(L.counts.size()); ++l)
      if (l % q == 0) divisible += L.counts[l - 1];
    if (divisible > n - q) return {false, q};
  }
  return {true, std::nullopt};
}

namespace {

// Walks from vertex 1 (circulant symmetry lets the start be fixed), consuming
// one length per step.
class LengthWalk {
 public:
  LengthWalk(const Instance& inst, std::vector<int> counts, WalkKind kind)
      : inst_(inst), counts_(std::move(counts)), kind_(kind),
        used_(inst.n() + 1, false) {}

  bool solve() {
    used_[1] = true;
    return step(1, 1);
  }

 private:
  bool step(Vertex at, int placed) {
    const int n = inst_.n();
    if (placed == n) {
      if (kind_ == WalkKind::kPath) return true;
      const int closing = edge_length(inst_, at, 1);
      return counts_[closing - 1] == 1;
    }
    for (int l = 1; l <= inst_.d(); ++l) {
      if (counts_[l - 1] == 0) continue;
      const Vertex forward = inst_.wrap(static_cast<long>(at) + l);
      const Vertex backward = inst_.wrap(static_cast<long>(at) - l);
      for (Vertex next : {forward, backward}) {
        if (used_[next]) continue;
        --counts_[l - 1];
        used_[next] = true;
        const bool ok = step(next, placed + 1);
        used_[next] = false;
        ++counts_[l - 1];
        if (ok) return true;
        if (forward == backward) break;
      }
    }
    return false;
  }

  const Instance& inst_;
  std::vector<int> counts_;
  WalkKind kind_;
  std::vector<bool> used_;
};

}  // namespace

bool edge_length_feasible(const Instance& inst, const LengthMultiset& L,
                          WalkKind kind, const Caps& caps) {
  const int n = inst.n();
  check_cap(n, caps.feasibility, "edge-length feasibility");
  if (static_cast<int>(L.counts.size()) != inst.d())
    throw DimensionMismatchError("multiset needs d length slots");
  const int want = kind == WalkKind::kPath ? n - 1 : n;
  if (L.size() != want)
    throw DomainError("multiset has " + std::to_string(L.size()) +
                      " lengths, expected " + std::to_string(want));
  return LengthWalk(inst, L.counts, kind).solve();
}

}  // namespace circlet
