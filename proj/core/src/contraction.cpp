#include "circlet/contraction.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "circlet/errors.hpp"
#include "circlet/inequality.hpp"

namespace circlet {
namespace {

void require_window_size(const Instance& inst) {
  if (inst.n() < 4 || inst.n() % 2 != 0)
    throw DomainError("windows need an even n >= 4, got n=" +
                      std::to_string(inst.n()));
}

long circlet_cost(const Instance& inst, Vertex a, Vertex b) {
  return circlet_coeffs(inst).at(edge_length(inst, a, b));
}

long tour_cost(const Tour& tour) {
  const Instance inst(tour.size());
  const auto k = circlet_coeffs(inst);
  long total = 0;
  for (const Edge& e : tour.edges()) total += k.at(edge_length(inst, e));
  return total;
}

bool in_window_one(const Instance& inst, Vertex v) {
  const int d = inst.d();
  return v == 1 || v == 2 || v == d + 1 || v == d + 2;
}

bool is_top(const Instance& inst, Vertex v) { return v >= 3 && v <= inst.d(); }

void require_outside(const Instance& inst, Vertex v) {
  if (!inst.contains(v) || in_window_one(inst, v))
    throw DomainError("vertex " + std::to_string(v) +
                      " lies in the contracted window {1, 2, d+1, d+2}");
}

void require_normalized(const Tour& tour, const StructureHit& hit) {
  const Instance inst(tour.size());
  inst.require_circlet();
  if (hit.kind == StructureKind::kB1)
    throw DomainError("B1 hits must be reflected to B2 before contracting; "
                      "use normalize() or analyze_hit()");
  if (hit.u != 1)
    throw DomainError("hit must be normalized to u=1 before contracting");
  if (!hit.contractible)
    throw DomainError("hit is not contractible: j or k lies in the window");
  const auto hits = detect_structures(tour);
  if (std::find(hits.begin(), hits.end(), hit) == hits.end())
    throw DomainError("hit does not occur in the tour");
}

}  // namespace

// ---------------------------------------------------------------------------
// Windows

std::array<Vertex, 4> window_vertices(const Instance& inst, Vertex u) {
  require_window_size(inst);
  const int d = inst.d();
  return {inst.wrap(u), inst.wrap(u + 1L), inst.wrap(static_cast<long>(u) + d),
          inst.wrap(static_cast<long>(u) + d + 1)};
}

int window_count(const Tour& tour, Vertex u) {
  const Instance inst(tour.size());
  const auto [a, b, c, e] = window_vertices(inst, u);
  return tour.has_edge(a, b) + tour.has_edge(c, e) + tour.has_edge(a, c) +
         tour.has_edge(b, e);
}

WindowIdentity window_identity(const Tour& tour) {
  const Instance inst(tour.size());
  require_window_size(inst);
  const auto t = integer_length_profile(inst, tour.order());
  WindowIdentity out;
  out.lhs = t[0] + 2 * t[inst.d() - 1];
  for (Vertex u = 1; u <= inst.d(); ++u) out.rhs += window_count(tour, u);
  return out;
}

// ---------------------------------------------------------------------------
// Structures

const char* to_string(StructureKind kind) noexcept {
  switch (kind) {
    case StructureKind::kA: return "A";
    case StructureKind::kB1: return "B1";
    case StructureKind::kB2: return "B2";
  }
  return "?";
}

std::vector<StructureHit> detect_structures(const Tour& tour) {
  const Instance inst(tour.size());
  require_window_size(inst);
  std::vector<StructureHit> hits;
  for (Vertex u = 1; u <= inst.n(); ++u) {
    const auto w = window_vertices(inst, u);
    const auto [a, b, c, e] = w;
    auto outside = [&](Vertex v) {
      return std::find(w.begin(), w.end(), v) == w.end();
    };
    auto record = [&](StructureKind kind, Vertex j, Vertex k) {
      hits.push_back({u, kind, j, k, outside(j) && outside(k)});
    };
    if (tour.has_edge(c, a) && tour.has_edge(a, b) && tour.has_edge(b, e))
      record(StructureKind::kA, tour.other_neighbor(e, b),
             tour.other_neighbor(c, a));
    if (tour.has_edge(b, a) && tour.has_edge(a, c) && tour.has_edge(c, e))
      record(StructureKind::kB1, tour.other_neighbor(b, a),
             tour.other_neighbor(e, c));
    if (tour.has_edge(a, b) && tour.has_edge(b, e) && tour.has_edge(e, c))
      record(StructureKind::kB2, tour.other_neighbor(a, b),
             tour.other_neighbor(c, e));
  }
  return hits;
}

NormalizedHit normalize(const Tour& tour, const StructureHit& hit) {
  const Instance inst(tour.size());
  require_window_size(inst);
  const int n = inst.n();
  const bool reflect_first = hit.kind == StructureKind::kB1;
  const Vertex u = reflect_first ? inst.wrap(static_cast<long>(n) - hit.u - 1) : hit.u;

  std::vector<Vertex> relabeling(n);
  for (Vertex v = 1; v <= n; ++v) {
    const Vertex r = reflect_first ? inst.wrap(static_cast<long>(n) - v) : v;
    relabeling[v - 1] = inst.wrap(static_cast<long>(r) - (u - 1));
  }
  NormalizedHit out{relabel(tour, relabeling), hit, relabeling};
  out.hit.u = 1;
  out.hit.kind = reflect_first ? StructureKind::kB2 : hit.kind;
  out.hit.j = relabeling[hit.j - 1];
  out.hit.k = relabeling[hit.k - 1];
  return out;
}

// ---------------------------------------------------------------------------
// Contraction

Vertex contracted_label(const Instance& inst, Vertex s) {
  require_outside(inst, s);
  return s <= inst.d() ? s - 2 : s - 4;
}

EdgeDelta per_edge_delta(const Instance& inst, Vertex s, Vertex t) {
  inst.require_circlet();
  require_outside(inst, s);
  require_outside(inst, t);
  const int len = edge_length(inst, s, t);
  const bool same_side = is_top(inst, s) == is_top(inst, t);
  EdgeDelta out;
  if (same_side) {
    out.new_length = len;
    out.delta = len % 2 == 1 ? 0 : 2;
  } else {
    out.new_length = len - 2;
    out.delta = (s - t) % 2 == 0 ? 0 : 2;
  }
  out.new_cost = circlet_coeffs(inst).at(len) - out.delta;
  return out;
}

Tour contract(const Tour& tour, const StructureHit& hit) {
  require_normalized(tour, hit);
  const Instance inst(tour.size());
  std::vector<Vertex> order;
  order.reserve(inst.n() - 4);
  for (Vertex v : tour.order())
    if (!in_window_one(inst, v)) order.push_back(contracted_label(inst, v));
  return Tour(std::move(order));
}

bool ContractionReport::dichotomy_holds() const noexcept {
  if (kind == StructureKind::kB2) return chain_delta >= 4;
  return chain_delta >= 4 || (chain_delta == 2 && reduced_edges > 0);
}

ContractionReport aggregate_delta(const Tour& tour, const StructureHit& hit) {
  const Tour contracted = contract(tour, hit);
  const Instance inst(tour.size());
  const Instance small(inst.n() - 4);
  const int d = inst.d();

  ContractionReport r{tour, contracted, hit};
  r.kind = hit.kind;
  r.j = hit.j;
  r.k = hit.k;
  r.normalization.resize(inst.n());
  for (Vertex v = 1; v <= inst.n(); ++v) r.normalization[v - 1] = v;

  const std::vector<Vertex> chain =
      hit.kind == StructureKind::kB2
          ? std::vector<Vertex>{hit.j, 1, 2, d + 2, d + 1, hit.k}
          : std::vector<Vertex>{hit.j, d + 2, 2, 1, d + 1, hit.k};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    r.chain_cost += circlet_cost(inst, chain[i], chain[i + 1]);
  r.new_edge_cost = circlet_cost(small, contracted_label(inst, hit.j),
                                 contracted_label(inst, hit.k));
  r.chain_delta = r.chain_cost - r.new_edge_cost;

  long per_edge = 0;
  for (const Edge& e : tour.edges()) {
    if (in_window_one(inst, e.lo) || in_window_one(inst, e.hi)) continue;
    const EdgeDelta ed = per_edge_delta(inst, e.lo, e.hi);
    r.edges.push_back({e,
                       Edge::of(contracted_label(inst, e.lo),
                                contracted_label(inst, e.hi)),
                       circlet_cost(inst, e.lo, e.hi), ed.new_cost});
    per_edge += ed.delta;
    if (ed.delta > 0) ++r.reduced_edges;
  }
  r.aggregate_delta = r.chain_delta + per_edge;
  r.direct_delta = tour_cost(tour) - tour_cost(contracted);
  return r;
}

ContractionReport analyze_hit(const Tour& tour, const StructureHit& hit) {
  if (!hit.contractible)
    throw DomainError("hit is not contractible: j or k lies in the window");
  const NormalizedHit nh = normalize(tour, hit);
  ContractionReport r = aggregate_delta(nh.tour, nh.hit);
  r.original = tour;
  r.source = hit;
  r.normalization = nh.relabeling;
  return r;
}

std::string format_report(const ContractionReport& r, bool verbose) {
  std::string out = std::string("contract ") + to_string(r.source.kind) +
                    " u=" + std::to_string(r.source.u) +
                    " j=" + std::to_string(r.source.j) +
                    " k=" + std::to_string(r.source.k) +
                    " delta=" + std::to_string(r.direct_delta) + "\n";
  if (!verbose) return out;
  out += "  normalized " + std::string(to_string(r.kind)) + " j=" +
         std::to_string(r.j) + " k=" + std::to_string(r.k) + "\n";
  out += "  chain cost=" + std::to_string(r.chain_cost) +
         " new=" + std::to_string(r.new_edge_cost) +
         " delta=" + std::to_string(r.chain_delta) + "\n";
  for (const auto& e : r.edges)
    out += "  edge " + std::to_string(e.before.lo) + "-" +
           std::to_string(e.before.hi) + " -> " + std::to_string(e.after.lo) +
           "-" + std::to_string(e.after.hi) + " cost " +
           std::to_string(e.old_cost) + " -> " + std::to_string(e.new_cost) +
           "\n";
  out += "  aggregate=" + std::to_string(r.aggregate_delta) +
         " direct=" + std::to_string(r.direct_delta) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Chain case analysis

int chain_threshold(StructureKind kind) {
  switch (kind) {
    case StructureKind::kB2: return 4;
    case StructureKind::kA: return 2;
    case StructureKind::kB1: break;
  }
  throw DomainError("chain values are defined for A and B2 only");
}

namespace {

void require_pair(const Instance& inst, StructureKind variant, Vertex j,
                  Vertex k) {
  inst.require_circlet();
  if (inst.n() < 8) throw DomainError("chain values need n >= 8");
  chain_threshold(variant);
  require_outside(inst, j);
  require_outside(inst, k);
  if (j == k) throw DomainError("j and k must differ");
}

// c_{j,1} + c_{d+1,k} - c' - 2, selected by parity and side.
long b2_chain_value(long n, long d, long j, long k, bool jt, bool kt) {
  const long a = std::labs(j - k);
  const bool je = j % 2 == 0, ke = k % 2 == 0;
  if (je && ke) {
    if (jt && kt) return j - k + a;
    if (!jt && !kt) return k - j + a;
    if (jt) return k < d + j ? 2 * k - n - 4 : 2 * j - 4;
    return j < d + k ? n - 2 * k : 2 * n - 2 * j;
  }
  if (!je && !ke) {
    if (jt && kt) return k - j + a;
    if (!jt && !kt) return j - k + a;
    if (jt) return k < d + j ? n - 2 * j : 2 * n - 2 * k;
    return j < d + k ? 2 * j - n - 4 : 2 * k - 4;
  }
  if (!je && ke) {
    if (jt && kt) return n - j - k - a;
    if (!jt && !kt) return j + k - a - n - 4;
    if (jt) return k < d + j ? 0 : 2 * k - 2 * j - n;
    return j < d + k ? 0 : 2 * j - 2 * k - n;
  }
  if (jt && kt) return j + k - a - 4;
  if (!jt && !kt) return 2 * n - j - k - a;
  if (jt) return k > d + j ? 0 : n + 2 * j - 2 * k;
  return j > d + k ? 0 : n - 2 * j + 2 * k;
}

// c_{j,d+2} + c_{d+1,k} - c' - 1.
long a_chain_value(long n, long d, long j, long k, bool jt, bool kt) {
  const long a = std::labs(j - k);
  const bool je = j % 2 == 0, ke = k % 2 == 0;
  if (je && ke) {
    if (jt && kt) return j - k + a;
    if (!jt && !kt) return 2 + a - (j - k);
    if (jt) return k < d + j ? 2 * k - n - 4 : 2 * j - 4;
    return j < d + k ? n - 2 * k + 2 : 2 * n - 2 * j + 2;
  }
  if (!je && !ke) {
    if (jt && kt) return 2 + a + (k - j);
    if (!jt && !kt) return a + j - k;
    if (jt) return k < d + j ? n + 2 - 2 * j : 2 * n + 2 - 2 * k;
    return j < d + k ? 2 * j - n - 4 : 2 * k - 4;
  }
  if (!je && ke) {
    if (jt && kt) return n + 2 - j - k - a;
    if (!jt && !kt) return j + k - a - n - 4;
    if (jt) return k < d + j ? 2 : 2 * k - 2 * j - n + 2;
    return j < d + k ? 0 : 2 * j - 2 * k - n;
  }
  if (jt && kt) return j + k - a - 4;
  if (!jt && !kt) return 2 * n + 2 - j - k - a;
  if (jt) return k < d + j ? n + 2 * j - 2 * k : 0;
  return j < d + k ? n + 2 - 2 * j + 2 * k : 2;
}

}  // namespace

long chain_case_value(const Instance& inst, StructureKind variant, Vertex j,
                         Vertex k) {
  require_pair(inst, variant, j, k);
  const bool jt = is_top(inst, j), kt = is_top(inst, k);
  return variant == StructureKind::kB2
             ? b2_chain_value(inst.n(), inst.d(), j, k, jt, kt)
             : a_chain_value(inst.n(), inst.d(), j, k, jt, kt);
}

long chain_slack_direct(const Instance& inst, StructureKind variant, Vertex j,
                        Vertex k) {
  require_pair(inst, variant, j, k);
  const int d = inst.d();
  const Instance small(inst.n() - 4);
  const long replaced =
      circlet_cost(small, contracted_label(inst, j), contracted_label(inst, k));
  if (variant == StructureKind::kB2)
    return circlet_cost(inst, j, 1) + circlet_cost(inst, d + 1, k) - replaced - 2;
  return circlet_cost(inst, j, d + 2) + circlet_cost(inst, d + 1, k) - replaced - 1;
}

bool is_enumerated_zero_case(const Instance& inst, Vertex j, Vertex k) {
  require_pair(inst, StructureKind::kA, j, k);
  const int d = inst.d();
  const bool jt = is_top(inst, j), kt = is_top(inst, k);
  const bool je = j % 2 == 0, ke = k % 2 == 0;
  if (jt && kt) return je && ke && j < k;
  if (!jt && !kt) return !je && !ke && j < k;
  if (!jt) return !je && ke && j <= d + k;
  return je && !ke && k >= d + j;
}

// ---------------------------------------------------------------------------
// Parity groups

std::optional<VertexGroup> vertex_group(const Instance& inst, Vertex v) {
  inst.require_circlet();
  if (!inst.contains(v) || in_window_one(inst, v)) return std::nullopt;
  const bool odd = v % 2 == 1;
  if (is_top(inst, v)) return odd ? VertexGroup::kTopOdd : VertexGroup::kTopEven;
  return odd ? VertexGroup::kBottomOdd : VertexGroup::kBottomEven;
}

std::vector<Vertex> group_members(const Instance& inst, VertexGroup g) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= inst.n(); ++v)
    if (vertex_group(inst, v) == g) out.push_back(v);
  return out;
}

bool in_s2(VertexGroup g) noexcept {
  return g == VertexGroup::kTopEven || g == VertexGroup::kBottomOdd;
}

bool is_g_circle_edge(VertexGroup a, VertexGroup b) noexcept {
  return in_s2(a) != in_s2(b);
}

bool GroupWalk::counts_equal() const noexcept {
  return std::all_of(visit_counts.begin(), visit_counts.end(),
                     [&](int c) { return c == visit_counts[0]; });
}

GroupWalk group_walk_trace(const Tour& tour, const StructureHit& hit) {
  require_normalized(tour, hit);
  const Instance inst(tour.size());
  GroupWalk out;
  out.uses_only_g_circle = true;
  out.all_deltas_zero = true;

  // The window's four vertices form the chain interior, so stepping away
  // from it at j walks the rest of the tour and ends at k.
  Vertex prev = 0;
  for (Vertex v : tour.neighbors(hit.j))
    if (in_window_one(inst, v)) prev = v;
  Vertex at = hit.j;
  for (;;) {
    const VertexGroup g = *vertex_group(inst, at);
    out.walk.push_back(g);
    ++out.visit_counts[static_cast<int>(g)];
    if (at == hit.k) break;
    const Vertex next = tour.other_neighbor(at, prev);
    const VertexGroup h = *vertex_group(inst, next);
    if (!is_g_circle_edge(g, h)) out.uses_only_g_circle = false;
    if (per_edge_delta(inst, at, next).delta != 0) out.all_deltas_zero = false;
    prev = at;
    at = next;
  }
  out.endpoints_in_s2 = in_s2(*vertex_group(inst, hit.j)) &&
                        in_s2(*vertex_group(inst, hit.k));
  return out;
}

}  // namespace circlet
