#pragma once

#include <cstdint>
#include <vector>

#include "circlet/caps.hpp"
#include "circlet/circulant.hpp"

namespace circlet {

enum class SeparationMode { kExhaustive, kHeuristic };

const char* to_string(SeparationMode mode) noexcept;

struct SeparationOptions {
  SeparationMode mode = SeparationMode::kExhaustive;
  int budget = 64;          // heuristic restarts
  std::uint64_t seed = 1;   // heuristic RNG seed
  int threads = 1;          // exhaustive workers
  Caps caps{};
};

struct SeparationResult {
  // labeling[v-1] is the label given to vertex v.
  std::vector<Vertex> labeling;
  Rational value;      // circlet value of the relabeled point
  Rational violation;  // rhs - value; positive means violated
  SeparationMode mode = SeparationMode::kExhaustive;
  long long candidates = 0;  // labelings evaluated

  bool violated() const { return violation > 0; }
};

// Searches vertex labelings for the one minimizing the circlet value of x.
//
// Exhaustive mode walks one representative per dihedral class of labelings
// (label 1 on vertex 1, vertex carrying label 2 smaller than the one carrying
// label n): n!/(2n) candidates, ties broken toward the lexicographically
// smallest labeling. It throws BudgetExceededError above caps.enumeration.
// Heuristic mode runs `budget` seeded random restarts of 2-swap descent; its
// non-violation is not a certificate.
SeparationResult separate(const FractionalPoint& x,
                          const SeparationOptions& options = {});

// Circlet value of x under a labeling, computed directly.
Rational circlet_value_under(const FractionalPoint& x,
                             std::span<const Vertex> labeling);

}  // namespace circlet
