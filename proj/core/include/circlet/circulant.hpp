#pragma once

#include <array>
#include <compare>
#include <map>
#include <span>
#include <vector>

#include "circlet/rational.hpp"

namespace circlet {

using Vertex = int;

// A complete graph K_n on vertices 1..n with d = floor(n/2). Circlet
// operations additionally call require_circlet(), which rejects n % 4 != 0.
class Instance {
 public:
  // Any n >= 3; throws DomainError otherwise.
  explicit Instance(int n);

  // Throws UnsupportedInstanceError unless n >= 4 and 4 | n.
  static Instance circlet(int n);

  int n() const noexcept { return n_; }
  int d() const noexcept { return n_ / 2; }
  bool is_circlet() const noexcept { return n_ >= 4 && n_ % 4 == 0; }
  void require_circlet() const;

  // Maps any integer onto the 1-based label in [1, n] congruent to it.
  Vertex wrap(long v) const noexcept;

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int n_;
};

// Unordered edge {lo, hi} with lo < hi.
struct Edge {
  Vertex lo = 0;
  Vertex hi = 0;

  // Normalizes the endpoint order. Throws InvalidEdgeError for i == j.
  static Edge of(Vertex i, Vertex j);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Circulant length min(|i-j|, n-|i-j|). Throws InvalidEdgeError when i == j
// or either label lies outside [1, n].
int edge_length(const Instance& inst, Vertex i, Vertex j);
inline int edge_length(const Instance& inst, Edge e) {
  return edge_length(inst, e.lo, e.hi);
}

// A Hamiltonian cycle on [n] stored in canonical visit order: starts at 1 and
// the second vertex is the smaller neighbour of 1.
class Tour {
 public:
  // Validates that `visit_order` is a permutation of 1..n (n >= 3) and
  // canonicalizes it. Throws DomainError on invalid input.
  explicit Tour(std::vector<Vertex> visit_order);

  int size() const noexcept { return static_cast<int>(order_.size()); }
  const std::vector<Vertex>& order() const noexcept { return order_; }

  // Neighbours of v in the cycle, smaller first.
  std::array<Vertex, 2> neighbors(Vertex v) const;
  // The neighbour of v that is not `other` (other must be adjacent to v).
  Vertex other_neighbor(Vertex v, Vertex other) const;
  bool has_edge(Vertex a, Vertex b) const;
  // The n edges, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Tour& a, const Tour& b) {
    return a.order_ == b.order_;
  }
  friend auto operator<=>(const Tour& a, const Tour& b) {
    return a.order_ <=> b.order_;
  }

 private:
  std::vector<Vertex> order_;
  std::vector<std::array<Vertex, 2>> adjacency_;  // index v-1
};

// Canonical rotation/direction of a visit sequence that is already known to
// be a permutation of 1..n.
std::vector<Vertex> canonical_order(std::span<const Vertex> visit_order);

// Relabelings. `rotate` maps v to v+m, `reflect` maps v to n-v (0 -> n),
// `relabel` maps v to labeling[v-1].
Tour rotate(const Tour& tour, int m);
Tour reflect(const Tour& tour);
Tour relabel(const Tour& tour, std::span<const Vertex> labeling);

// Total edge weight per length; index 0 holds length 1.
class LengthProfile {
 public:
  LengthProfile() = default;
  explicit LengthProfile(std::vector<Rational> totals);
  static LengthProfile from_integers(std::span<const long> totals);
  static LengthProfile zeros(int d);

  int dimension() const noexcept { return static_cast<int>(t_.size()); }
  // 1-based by length.
  const Rational& at(int length) const;
  Rational& at(int length);
  const std::vector<Rational>& totals() const noexcept { return t_; }
  Rational sum() const;

  friend bool operator==(const LengthProfile&, const LengthProfile&) = default;
  friend bool operator<(const LengthProfile& a, const LengthProfile& b) {
    return a.t_ < b.t_;
  }

 private:
  std::vector<Rational> t_;
};

// Symmetric rational edge weights on K_n. Absent edges read as zero and zero
// assignments are dropped, so equal points compare equal.
class FractionalPoint {
 public:
  explicit FractionalPoint(Instance inst) : inst_(inst) {}

  const Instance& instance() const noexcept { return inst_; }
  int n() const noexcept { return inst_.n(); }

  Rational weight(Vertex i, Vertex j) const;
  void set(Vertex i, Vertex j, const Rational& w);
  void add(Vertex i, Vertex j, const Rational& w);

  // Sum of weights on edges incident to v.
  Rational degree(Vertex v) const;
  const std::map<Edge, Rational>& support() const noexcept { return w_; }

  friend bool operator==(const FractionalPoint&,
                         const FractionalPoint&) = default;

 private:
  Instance inst_;
  std::map<Edge, Rational> w_;
};

// Incidence vector of a tour as a 0/1 point.
FractionalPoint indicator(const Tour& tour);
FractionalPoint relabel(const FractionalPoint& x,
                        std::span<const Vertex> labeling);

// Throws DimensionMismatchError when the tour and instance sizes differ.
LengthProfile length_profile(const Instance& inst, const Tour& tour);
std::vector<long> integer_length_profile(const Instance& inst,
                                         std::span<const Vertex> visit_order);
LengthProfile project_weights(const Instance& inst, const FractionalPoint& x);

}  // namespace circlet
