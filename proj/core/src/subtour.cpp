#include "circlet/subtour.hpp"

#include <deque>

#include "circlet/errors.hpp"
#include "circlet/inequality.hpp"
#include "circlet/min_cut.hpp"
#include "circlet/oracle.hpp"

namespace circlet {

FractionalPoint half_one_point(const Instance& inst) {
  return lambda_point(inst, make_rational(1, 2)).point;
}

LambdaPoint lambda_point(const Instance& inst, const Rational& lambda) {
  inst.require_circlet();
  const int n = inst.n(), d = inst.d();
  const Rational chord = 2 - 2 * lambda;
  LambdaPoint out{FractionalPoint(inst), false};
  for (Vertex v = 1; v <= n; ++v) out.point.set(v, inst.wrap(v + 1L), lambda);
  for (Vertex v = 1; v <= d; ++v) out.point.set(v, v + d, chord);
  out.box_feasible = lambda >= 0 && lambda <= 1 && chord >= 0 && chord <= 1;
  return out;
}

std::string SubtourCheck::describe() const {
  if (box_violation) {
    const auto& [e, w] = *box_violation;
    return "box x{" + std::to_string(e.lo) + "," + std::to_string(e.hi) +
           "}=" + to_string(w);
  }
  if (degree_violation) {
    const auto& [v, deg] = *degree_violation;
    return "degree v=" + std::to_string(v) + " sum=" + to_string(deg);
  }
  if (cut_side) {
    std::string side;
    for (Vertex v : *cut_side) side += (side.empty() ? "" : ",") + std::to_string(v);
    return "cut weight=" + to_string(cut_weight) + " side={" + side + "}";
  }
  return "feasible";
}

SubtourCheck subtour_feasible(const FractionalPoint& x, const Caps& caps) {
  const int n = x.n();
  if (n > caps.min_cut)
    throw BudgetExceededError("subtour check at n=" + std::to_string(n) +
                              " exceeds the cap " + std::to_string(caps.min_cut));
  SubtourCheck out;
  for (const auto& [e, w] : x.support())
    if (w < 0 || w > 1) {
      out.box_violation = {e, w};
      return out;
    }
  std::vector<Rational> degree(n + 1);
  for (const auto& [e, w] : x.support()) {
    degree[e.lo] += w;
    degree[e.hi] += w;
  }
  for (Vertex v = 1; v <= n; ++v)
    if (degree[v] != 2) {
      out.degree_violation = {v, degree[v]};
      return out;
    }

  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
  for (const auto& [e, wt] : x.support()) {
    w[e.lo - 1][e.hi - 1] = wt;
    w[e.hi - 1][e.lo - 1] = wt;
  }
  const MinCut cut = stoer_wagner_min_cut(w);
  out.cut_weight = cut.weight;
  if (cut.weight < 2) {
    // Report the shore without vertex 1.
    std::vector<bool> in(n + 1, false);
    for (int v : cut.side) in[v + 1] = true;
    const bool flip = in[1];
    std::vector<Vertex> side;
    for (Vertex v = 1; v <= n; ++v)
      if (in[v] != flip) side.push_back(v);
    out.cut_side = side;
    return out;
  }
  out.feasible = true;
  return out;
}

LambdaBounds lambda_bounds(const Instance& inst) {
  inst.require_circlet();
  const long n = inst.n();
  if (n < 8) throw DomainError("the crown bound needs n >= 8");
  return {1 - make_rational(2, n),
          make_rational(1, 2) + make_rational(2, 3 * n) + make_rational(1, 3 * (n - 6))};
}

Rational min_fx_at_half_one(const Instance& inst) {
  return evaluate(tt_coeffs(inst), project_weights(inst, half_one_point(inst)));
}

GapInstance gap_instance(const Instance& inst) {
  inst.require_circlet();
  const long n = inst.n();
  if ((n & (n - 1)) != 0)
    throw DomainError("gap instances need n to be a power of two, got n=" +
                      std::to_string(n));
  GapInstance g{inst, std::vector<long>(inst.d(), 4 * n * n), 4 * n * n};
  g.cost.front() = 1;
  g.cost.back() = 0;
  return g;
}

GapRatio gap_ratio(const Instance& inst, const Caps& caps) {
  const GapInstance g = gap_instance(inst);
  std::vector<Rational> cost(g.cost.begin(), g.cost.end());
  GapRatio out;
  out.tour_opt = min_tour_cost(inst, cost, caps);
  const auto profile = project_weights(inst, half_one_point(inst));
  out.lp_value = evaluate(g.cost, profile);
  out.ratio = out.tour_opt / out.lp_value;
  return out;
}

void EulerianMultigraph::add(Vertex i, Vertex j, int multiplicity) {
  edge_length(inst_, i, j);
  if (multiplicity < 1) throw DomainError("multiplicity must be positive");
  m_[Edge::of(i, j)] += multiplicity;
}

int EulerianMultigraph::edge_count() const {
  int total = 0;
  for (const auto& [e, m] : m_) total += m;
  return total;
}

int EulerianMultigraph::degree(Vertex v) const {
  int deg = 0;
  for (const auto& [e, m] : m_)
    if (e.lo == v || e.hi == v) deg += m;
  return deg;
}

bool EulerianMultigraph::all_degrees_even() const {
  for (Vertex v = 1; v <= inst_.n(); ++v)
    if (degree(v) % 2 != 0) return false;
  return true;
}

bool EulerianMultigraph::connected() const {
  const int n = inst_.n();
  std::vector<std::vector<Vertex>> adj(n + 1);
  for (const auto& [e, m] : m_) {
    adj[e.lo].push_back(e.hi);
    adj[e.hi].push_back(e.lo);
  }
  std::vector<bool> seen(n + 1, false);
  std::deque<Vertex> queue{1};
  seen[1] = true;
  int reached = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
  }
  return reached == n;
}

long EulerianMultigraph::cost(const std::vector<long>& cost_per_length) const {
  if (static_cast<int>(cost_per_length.size()) != inst_.d())
    throw DimensionMismatchError("cost vector needs d entries");
  long total = 0;
  for (const auto& [e, m] : m_) total += m * cost_per_length[edge_length(inst_, e) - 1];
  return total;
}

EulerianMultigraph eulerian_counterexample(const Instance& inst) {
  inst.require_circlet();
  const int n = inst.n(), d = inst.d();
  EulerianMultigraph g(inst);
  for (Vertex v = 1; v < d; v += 2) g.add(v, v + 1);
  for (Vertex v = d + 2; v < n - 1; v += 2) g.add(v, v + 1);
  g.add(d, d + 1);
  for (Vertex v = 1; v <= d; ++v) g.add(v, v + d);
  g.add(d, n);
  return g;
}

}  // namespace circlet
