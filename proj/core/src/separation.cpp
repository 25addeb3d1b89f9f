#include "circlet/separation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "circlet/errors.hpp"
#include "circlet/inequality.hpp"

namespace circlet {

const char* to_string(SeparationMode mode) noexcept {
  return mode == SeparationMode::kExhaustive ? "exhaustive" : "heuristic";
}

Rational circlet_value_under(const FractionalPoint& x,
                             std::span<const Vertex> labeling) {
  const Instance& inst = x.instance();
  return evaluate(circlet_coeffs(inst), project_weights(inst, relabel(x, labeling)));
}

namespace {

// Weights scaled by the lcm of their denominators so the search runs on
// integers. T is long long when everything fits, BigInt otherwise.
template <typename T>
struct Problem {
  int n = 0;
  std::vector<T> w;                // n*n, 0-based vertices
  std::vector<long> cost_by_gap;   // circlet coefficient of label gap g
  bool nonnegative = true;

  T weight(int a, int b) const { return w[a * n + b]; }
};

template <typename T>
Problem<T> make_problem(const FractionalPoint& x, const BigInt& scale) {
  const Instance& inst = x.instance();
  const auto k = circlet_coeffs(inst);
  Problem<T> p;
  p.n = inst.n();
  p.w.assign(p.n * p.n, T(0));
  for (const auto& [e, wt] : x.support()) {
    const BigInt scaled = wt.get_num() * (scale / wt.get_den());
    T v;
    if constexpr (std::is_same_v<T, long long>)
      v = scaled.get_si();
    else
      v = scaled;
    p.w[(e.lo - 1) * p.n + (e.hi - 1)] = v;
    p.w[(e.hi - 1) * p.n + (e.lo - 1)] = v;
    if (wt < 0) p.nonnegative = false;
  }
  p.cost_by_gap.assign(p.n, 0);
  for (int g = 1; g < p.n; ++g)
    p.cost_by_gap[g] = k.at(std::min(g, p.n - g));
  return p;
}

template <typename T>
T labeling_cost(const Problem<T>& p, const std::vector<Vertex>& label) {
  T total(0);
  for (int a = 0; a < p.n; ++a)
    for (int b = a + 1; b < p.n; ++b) {
      const T& wt = p.w[a * p.n + b];
      if (wt != 0) total += wt * p.cost_by_gap[std::abs(label[a] - label[b])];
    }
  return total;
}

template <typename T>
struct Best {
  bool found = false;
  T cost{};
  std::vector<Vertex> labeling;

  void offer(const T& c, const std::vector<Vertex>& lab) {
    if (!found || c < cost || (c == cost && lab < labeling)) {
      found = true;
      cost = c;
      labeling = lab;
    }
  }
};

// Places vertices on label positions 1..n in order. Position 1 holds vertex 0
// (vertex 1); the vertex at position 2 must be smaller than the one at
// position n, which picks one labeling per dihedral class.
template <typename T>
class Exhaustive {
 public:
  Exhaustive(const Problem<T>& p) : p_(p), at_(p.n), used_(p.n, false) {}

  Best<T> run_from(int second) {
    at_[0] = 0;
    used_[0] = true;
    at_[1] = second;
    used_[second] = true;
    T partial = p_.weight(0, second) * p_.cost_by_gap[1];
    dfs(2, partial);
    used_[second] = false;
    return best_;
  }

 private:
  void dfs(int pos, const T& partial) {
    const int n = p_.n;
    if (p_.nonnegative && best_.found && partial > best_.cost) return;
    if (pos == n) {
      if (at_[1] > at_[n - 1]) return;
      std::vector<Vertex> label(n);
      for (int i = 0; i < n; ++i) label[at_[i]] = i + 1;
      best_.offer(partial, label);
      return;
    }
    for (int v = 1; v < n; ++v) {
      if (used_[v]) continue;
      // The last vertex must exceed the one at position 2.
      if (pos == n - 1 && v < at_[1]) continue;
      T next = partial;
      for (int q = 0; q < pos; ++q) {
        const T& wt = p_.weight(at_[q], v);
        if (wt != 0) next += wt * p_.cost_by_gap[pos - q];
      }
      at_[pos] = v;
      used_[v] = true;
      dfs(pos + 1, next);
      used_[v] = false;
    }
  }

  const Problem<T>& p_;
  std::vector<int> at_;
  std::vector<bool> used_;
  Best<T> best_;
};

template <typename T>
Best<T> run_exhaustive(const Problem<T>& p, int threads) {
  const int n = p.n;
  std::vector<Best<T>> partial(n);
  auto work = [&](int first, int stride) {
    for (int second = first; second < n; second += stride) {
      Exhaustive<T> search(p);
      partial[second] = search.run_from(second);
    }
  };
  const int workers = std::max(1, std::min(threads, n - 1));
  if (workers == 1) {
    work(1, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work, 1 + t, workers);
    for (auto& th : pool) th.join();
  }
  Best<T> best;
  for (int s = 1; s < n; ++s)
    if (partial[s].found) best.offer(partial[s].cost, partial[s].labeling);
  return best;
}

template <typename T>
Best<T> run_heuristic(const Problem<T>& p, int budget, std::uint64_t seed,
                      long long& evaluations) {
  std::mt19937_64 rng(seed);
  Best<T> best;
  std::vector<Vertex> label(p.n);
  for (int r = 0; r < budget; ++r) {
    std::iota(label.begin(), label.end(), 1);
    std::shuffle(label.begin(), label.end(), rng);
    T current = labeling_cost(p, label);
    ++evaluations;
    bool improved = true;
    while (improved) {
      improved = false;
      for (int a = 0; a < p.n && !improved; ++a)
        for (int b = a + 1; b < p.n && !improved; ++b) {
          std::swap(label[a], label[b]);
          const T c = labeling_cost(p, label);
          ++evaluations;
          if (c < current) {
            current = c;
            improved = true;
          } else {
            std::swap(label[a], label[b]);
          }
        }
    }
    best.offer(current, label);
  }
  return best;
}

template <typename T>
SeparationResult solve(const FractionalPoint& x, const BigInt& scale,
                       const SeparationOptions& options) {
  const Problem<T> p = make_problem<T>(x, scale);
  SeparationResult out;
  out.mode = options.mode;
  Best<T> best;
  if (options.mode == SeparationMode::kExhaustive) {
    best = run_exhaustive(p, options.threads);
    BigInt count = 1;
    for (int i = 3; i <= p.n - 1; ++i) count *= i;  // (n-1)!/2
    out.candidates = count.get_si();
  } else {
    if (options.budget < 1) throw DomainError("heuristic budget must be positive");
    best = run_heuristic(p, options.budget, options.seed, out.candidates);
  }
  out.labeling = best.labeling;
  Rational value;
  if constexpr (std::is_same_v<T, long long>)
    value = Rational(BigInt(static_cast<long>(best.cost)), scale);
  else
    value = Rational(best.cost, scale);
  value.canonicalize();
  out.value = value;
  out.violation = Rational(x.n() - 2) - value;
  return out;
}

}  // namespace

SeparationResult separate(const FractionalPoint& x,
                          const SeparationOptions& options) {
  const Instance& inst = x.instance();
  inst.require_circlet();
  if (options.mode == SeparationMode::kExhaustive &&
      inst.n() > options.caps.enumeration)
    throw BudgetExceededError(
        "exhaustive separation at n=" + std::to_string(inst.n()) +
        " exceeds the enumeration cap " + std::to_string(options.caps.enumeration) +
        "; use heuristic mode");

  BigInt scale = 1;
  BigInt magnitude = 0;
  for (const auto& [e, w] : x.support()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), w.get_den().get_mpz_t());
  }
  for (const auto& [e, w] : x.support())
    magnitude += abs(w.get_num()) * (scale / w.get_den());
  // Worst case: every weight times the largest coefficient (< n).
  const BigInt bound = magnitude * inst.n();
  const bool fits = bound < BigInt("4611686018427387904") && sizeof(long) == 8;
  if (fits) return solve<long long>(x, scale, options);
  return solve<BigInt>(x, scale, options);
}

}  // namespace circlet
