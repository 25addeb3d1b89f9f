#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "circlet/caps.hpp"
#include "circlet/circulant.hpp"

namespace circlet {

// Calls `visit` once per undirected Hamiltonian cycle of K_n, in
// lexicographic order of the canonical visit sequence. Returns the number of
// cycles, (n-1)!/2. Throws BudgetExceededError when n > caps.enumeration.
using TourVisitor = std::function<void(std::span<const Vertex>)>;
long long for_each_tour(const Instance& inst, const TourVisitor& visit,
                        const Caps& caps = {});

// Materialized version of for_each_tour for small n.
std::vector<Tour> enumerate_tours(const Instance& inst, const Caps& caps = {});

// Minimum of sum_e cost(length(e)) over every Hamiltonian cycle, plus how many
// cycles attain it. Work is split by second vertex across `threads` workers;
// the result is independent of the split.
struct ExhaustiveScan {
  long long tours = 0;
  long min_cost = 0;
  long long argmin_count = 0;
};
ExhaustiveScan exhaustive_min_cost(const Instance& inst,
                                   std::span<const long> cost_per_length,
                                   const Caps& caps = {}, int threads = 1);

// Held-Karp: exact minimum over Hamiltonian cycles of sum_e cost(length(e)).
// Throws BudgetExceededError when n > caps.dp and DimensionMismatchError when
// the cost vector does not have d entries.
Rational min_tour_cost(const Instance& inst,
                       std::span<const Rational> cost_per_length,
                       const Caps& caps = {});

// The distinct length profiles of Hamiltonian cycles, sorted ascending.
std::vector<std::vector<long>> el_points(const Instance& inst,
                                         const Caps& caps = {});

// counts[i-1] copies of length i, for i in 1..floor(n/2).
struct LengthMultiset {
  std::vector<int> counts;

  int size() const;
  static LengthMultiset from_lengths(const Instance& inst,
                                     std::span<const int> lengths);
};

struct BurattiResult {
  bool holds = true;
  std::optional<int> violated_q;  // smallest divisor q of n that fails
};

// For every divisor q of n: #{e in L : q | e} <= n - q. L must have n - 1
// entries (DomainError otherwise).
BurattiResult buratti_condition(const Instance& inst, const LengthMultiset& L);

enum class WalkKind { kPath, kCycle };

// Whether some Hamiltonian path (n-1 edges) or cycle (n edges) of K_n uses
// exactly the multiset L of lengths. Exhaustive backtracking; throws
// BudgetExceededError when n > caps.feasibility.
bool edge_length_feasible(const Instance& inst, const LengthMultiset& L,
                          WalkKind kind, const Caps& caps = {});

}  // namespace circlet
