#include "circlet/circulant.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "circlet/errors.hpp"

namespace circlet {

Instance::Instance(int n) : n_(n) {
  if (n < 3) throw DomainError("n must be at least 3, got " + std::to_string(n));
}

Instance Instance::circlet(int n) {
  if (n < 4 || n % 4 != 0)
    throw UnsupportedInstanceError("circlet operations need 4 | n, got n=" +
                                   std::to_string(n));
  return Instance(n);
}

void Instance::require_circlet() const {
  if (!is_circlet())
    throw UnsupportedInstanceError("circlet operations need 4 | n, got n=" +
                                   std::to_string(n_));
}

Vertex Instance::wrap(long v) const noexcept {
  long r = (v - 1) % n_;
  if (r < 0) r += n_;
  return static_cast<Vertex>(r + 1);
}

Edge Edge::of(Vertex i, Vertex j) {
  if (i == j) throw InvalidEdgeError("loop at vertex " + std::to_string(i));
  return i < j ? Edge{i, j} : Edge{j, i};
}

int edge_length(const Instance& inst, Vertex i, Vertex j) {
  if (!inst.contains(i) || !inst.contains(j))
    throw InvalidEdgeError("vertex out of range in {" + std::to_string(i) +
                           "," + std::to_string(j) + "}");
  if (i == j) throw InvalidEdgeError("loop at vertex " + std::to_string(i));
  const int diff = std::abs(i - j);
  return std::min(diff, inst.n() - diff);
}

std::vector<Vertex> canonical_order(std::span<const Vertex> visit_order) {
  const int n = static_cast<int>(visit_order.size());
  const auto start =
      std::find(visit_order.begin(), visit_order.end(), 1) - visit_order.begin();
  const Vertex next = visit_order[(start + 1) % n];
  const Vertex prev = visit_order[(start + n - 1) % n];
  const int step = next < prev ? 1 : n - 1;
  std::vector<Vertex> out(n);
  for (int i = 0; i < n; ++i) out[i] = visit_order[(start + i * step) % n];
  return out;
}

Tour::Tour(std::vector<Vertex> visit_order) {
  const int n = static_cast<int>(visit_order.size());
  if (n < 3) throw DomainError("a tour needs at least 3 vertices");
  std::vector<bool> seen(n + 1, false);
  for (Vertex v : visit_order) {
    if (v < 1 || v > n)
      throw DomainError("tour vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw DomainError("tour repeats vertex " + std::to_string(v));
    seen[v] = true;
  }
  order_ = canonical_order(visit_order);
  adjacency_.resize(n);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order_[i];
    const Vertex a = order_[(i + 1) % n];
    const Vertex b = order_[(i + n - 1) % n];
    adjacency_[v - 1] = {std::min(a, b), std::max(a, b)};
  }
}

std::array<Vertex, 2> Tour::neighbors(Vertex v) const {
  if (v < 1 || v > size())
    throw DomainError("vertex " + std::to_string(v) + " not in tour");
  return adjacency_[v - 1];
}

Vertex Tour::other_neighbor(Vertex v, Vertex other) const {
  const auto nb = neighbors(v);
  if (nb[0] == other) return nb[1];
  if (nb[1] == other) return nb[0];
  throw DomainError(std::to_string(other) + " is not adjacent to " +
                    std::to_string(v));
}

bool Tour::has_edge(Vertex a, Vertex b) const {
  if (a < 1 || a > size() || b < 1 || b > size()) return false;
  const auto& nb = adjacency_[a - 1];
  return nb[0] == b || nb[1] == b;
}

std::vector<Edge> Tour::edges() const {
  std::vector<Edge> out;
  out.reserve(order_.size());
  const int n = size();
  for (int i = 0; i < n; ++i) out.push_back(Edge::of(order_[i], order_[(i + 1) % n]));
  std::sort(out.begin(), out.end());
  return out;
}

Tour rotate(const Tour& tour, int m) {
  const Instance inst(tour.size());
  std::vector<Vertex> order;
  order.reserve(tour.size());
  for (Vertex v : tour.order()) order.push_back(inst.wrap(static_cast<long>(v) + m));
  return Tour(std::move(order));
}

Tour reflect(const Tour& tour) {
  const Instance inst(tour.size());
  std::vector<Vertex> order;
  order.reserve(tour.size());
  for (Vertex v : tour.order()) order.push_back(inst.wrap(inst.n() - v));
  return Tour(std::move(order));
}

Tour relabel(const Tour& tour, std::span<const Vertex> labeling) {
  if (static_cast<int>(labeling.size()) != tour.size())
    throw DimensionMismatchError("labeling size differs from tour size");
  std::vector<Vertex> order;
  order.reserve(tour.size());
  for (Vertex v : tour.order()) order.push_back(labeling[v - 1]);
  return Tour(std::move(order));
}

LengthProfile::LengthProfile(std::vector<Rational> totals) : t_(std::move(totals)) {}

LengthProfile LengthProfile::from_integers(std::span<const long> totals) {
  std::vector<Rational> t;
  t.reserve(totals.size());
  for (long v : totals) t.emplace_back(v);
  return LengthProfile(std::move(t));
}

LengthProfile LengthProfile::zeros(int d) {
  return LengthProfile(std::vector<Rational>(d));
}

const Rational& LengthProfile::at(int length) const { return t_.at(length - 1); }
Rational& LengthProfile::at(int length) { return t_.at(length - 1); }

Rational LengthProfile::sum() const {
  Rational s;
  for (const auto& v : t_) s += v;
  return s;
}

Rational FractionalPoint::weight(Vertex i, Vertex j) const {
  edge_length(inst_, i, j);
  const auto it = w_.find(Edge::of(i, j));
  return it == w_.end() ? Rational(0) : it->second;
}

void FractionalPoint::set(Vertex i, Vertex j, const Rational& w) {
  edge_length(inst_, i, j);
  const Edge e = Edge::of(i, j);
  Rational v = w;
  v.canonicalize();
  if (v == 0)
    w_.erase(e);
  else
    w_[e] = v;
}

void FractionalPoint::add(Vertex i, Vertex j, const Rational& w) {
  set(i, j, weight(i, j) + w);
}

Rational FractionalPoint::degree(Vertex v) const {
  Rational s;
  for (const auto& [e, w] : w_)
    if (e.lo == v || e.hi == v) s += w;
  return s;
}

FractionalPoint indicator(const Tour& tour) {
  FractionalPoint x{Instance(tour.size())};
  for (const Edge& e : tour.edges()) x.set(e.lo, e.hi, 1);
  return x;
}

FractionalPoint relabel(const FractionalPoint& x,
                        std::span<const Vertex> labeling) {
  if (static_cast<int>(labeling.size()) != x.n())
    throw DimensionMismatchError("labeling size differs from point size");
  FractionalPoint out(x.instance());
  for (const auto& [e, w] : x.support())
    out.set(labeling[e.lo - 1], labeling[e.hi - 1], w);
  return out;
}

std::vector<long> integer_length_profile(const Instance& inst,
                                         std::span<const Vertex> visit_order) {
  const int n = static_cast<int>(visit_order.size());
  if (n != inst.n())
    throw DimensionMismatchError("tour has " + std::to_string(n) +
                                 " vertices, instance has " +
                                 std::to_string(inst.n()));
  std::vector<long> t(inst.d(), 0);
  for (int i = 0; i < n; ++i)
    ++t[edge_length(inst, visit_order[i], visit_order[(i + 1) % n]) - 1];
  return t;
}

LengthProfile length_profile(const Instance& inst, const Tour& tour) {
  const auto t = integer_length_profile(inst, tour.order());
  return LengthProfile::from_integers(t);
}

LengthProfile project_weights(const Instance& inst, const FractionalPoint& x) {
  if (x.n() != inst.n())
    throw DimensionMismatchError("point and instance sizes differ");
  auto profile = LengthProfile::zeros(inst.d());
  for (const auto& [e, w] : x.support()) profile.at(edge_length(inst, e)) += w;
  return profile;
}

}  // namespace circlet
