#pragma once

#include <string>
#include <vector>

#include "circlet/caps.hpp"
#include "circlet/circulant.hpp"

namespace circlet {

// Position of edge {i, j} in the sorted order of the n(n-1)/2 edges of K_n.
int edge_index(int n, Edge e);
std::vector<int> incidence_vector(const Tour& tour);

// The d tours with chords {1, d+1} and {d, n} joined by length-1 paths, and
// their rotations by 1..d-1.
std::vector<Tour> base_tours(const Instance& inst);

// For 3 <= k <= d: a tour with k length-d edges, n-k-1 length-1 edges and
// one edge of cost k-1 (length k-1 for even k, d-k+1 for odd k).
Tour k_tour(const Instance& inst, int k);

// base_tours plus all n rotations of every k_tour: n(n-3)/2 tours.
std::vector<Tour> full_family(const Instance& inst);

struct FacetCertificate {
  int n = 0;
  int family = 0;
  int rank = 0;
  int expected = 0;  // n(n-3)/2
  bool tight = false;
  bool distinct = false;

  bool valid() const noexcept {
    return tight && distinct && family == expected && rank == expected;
  }
};

// Throws BudgetExceededError when n > caps.rank.
FacetCertificate certify_facet(const Instance& inst, const Caps& caps = {});

// `facet n=<n> family=<int> rank=<int> tight=<bool> valid=<bool>`
std::string format_certificate(const FacetCertificate& cert);

}  // namespace circlet
