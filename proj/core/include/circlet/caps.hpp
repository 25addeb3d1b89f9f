#pragma once

#include <optional>
#include <string_view>

namespace circlet {

// Upper bounds on n for the exponential-time engines.
struct Caps {
  int enumeration = 12;  // exhaustive tour / labeling enumeration
  int dp = 20;           // Held-Karp
  int rank = 16;         // facet certificate elimination
  int feasibility = 10;  // prescribed edge-length backtracking
  int min_cut = 256;     // subtour feasibility (polynomial, generous)

  // Defaults overridden by the CIRCLET_CAPS environment variable, formatted
  // "<enumeration>/<dp>/<rank>" (e.g. "12/20/16"). Missing trailing fields
  // keep their defaults.
  static Caps from_env();

  // Parses the CIRCLET_CAPS syntax on top of the defaults. nullopt on
  // malformed input.
  static std::optional<Caps> parse(std::string_view spec);
};

}  // namespace circlet
