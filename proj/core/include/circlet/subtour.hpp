#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circlet/caps.hpp"
#include "circlet/circulant.hpp"

namespace circlet {

// 1/2 on every length-1 edge, 1 on every length-d edge.
FractionalPoint half_one_point(const Instance& inst);

// lambda on every length-1 edge and 2 - 2 lambda on every length-d edge. Always
// constructed; box_feasible records whether every weight lies in [0, 1].
struct LambdaPoint {
  FractionalPoint point;
  bool box_feasible = false;
};
LambdaPoint lambda_point(const Instance& inst, const Rational& lambda);

// Outcome of the degree, box and cut tests. At most one witness is set: the
// first failing check in the order box, degree, cut.
struct SubtourCheck {
  bool feasible = false;
  std::optional<std::pair<Edge, Rational>> box_violation;
  std::optional<std::pair<Vertex, Rational>> degree_violation;
  std::optional<std::vector<Vertex>> cut_side;  // 1-based, sorted
  Rational cut_weight;                          // global min cut weight

  std::string describe() const;
};

// Throws BudgetExceededError when n > caps.min_cut.
SubtourCheck subtour_feasible(const FractionalPoint& x, const Caps& caps = {});

struct LambdaBounds {
  Rational circlet;  // 1 - 2/n
  Rational crown;    // 1/2 + 2/(3n) + 1/(3(n-6))
};
// Requires n >= 8 for the crown term.
LambdaBounds lambda_bounds(const Instance& inst);

// TT coefficients evaluated at the half/one point: (n/2)(n-3).
Rational min_fx_at_half_one(const Instance& inst);

// Cost 1 at length 1, 0 at length d, 4n^2 elsewhere; n must be a power of two
// divisible by 4.
struct GapInstance {
  Instance inst;
  std::vector<long> cost;  // index 0 is length 1
  long big_m = 0;
};
GapInstance gap_instance(const Instance& inst);

struct GapRatio {
  Rational tour_opt;
  Rational lp_value;
  Rational ratio;
};
GapRatio gap_ratio(const Instance& inst, const Caps& caps = {});

class EulerianMultigraph {
 public:
  explicit EulerianMultigraph(Instance inst) : inst_(inst) {}

  const Instance& instance() const noexcept { return inst_; }
  void add(Vertex i, Vertex j, int multiplicity = 1);
  const std::map<Edge, int>& edges() const noexcept { return m_; }
  int edge_count() const;

  int degree(Vertex v) const;
  bool all_degrees_even() const;
  bool connected() const;  // every vertex reachable through the support
  long cost(const std::vector<long>& cost_per_length) const;

 private:
  Instance inst_;
  std::map<Edge, int> m_;
};

// Length-1 pairs {1,2},{3,4},...,{d-1,d} and {d+2,d+3},...,{n-2,n-1}, the edge
// {d,d+1}, every chord {i,i+d}, and a second copy of {d,n}.
EulerianMultigraph eulerian_counterexample(const Instance& inst);

}  // namespace circlet
