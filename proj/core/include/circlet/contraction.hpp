#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circlet/circulant.hpp"

namespace circlet {

// ---------------------------------------------------------------------------
// Windows
//
// W_u is the vertex set {u, u+1, u+d, u+d+1} (labels mod n); W_u = W_{u+d}.
// T_u counts the tour's length-1 and length-d edges inside W_u. Window
// operations need an even n >= 4.

std::array<Vertex, 4> window_vertices(const Instance& inst, Vertex u);
int window_count(const Tour& tour, Vertex u);

struct WindowIdentity {
  long lhs = 0;  // t_1 + 2 t_d
  long rhs = 0;  // T_1 + ... + T_d
};
WindowIdentity window_identity(const Tour& tour);

// ---------------------------------------------------------------------------
// Structures
//
// Three-edge paths inside a window:
//   A:  {u+d, u}, {u, u+1}, {u+1, u+1+d}
//   B1: {u+1, u}, {u, u+d}, {u+d, u+1+d}
//   B2: {u, u+1}, {u+1, u+1+d}, {u+1+d, u+d}
// j and k are the tour neighbours hanging off the two path ends:
//   A:  j beyond u+1+d, k beyond u+d
//   B1: j beyond u+1,   k beyond u+1+d
//   B2: j beyond u,     k beyond u+d
// so that after normalizing to u = 1 the contracted chains are
//   B2: j-1-2-(d+2)-(d+1)-k   and   A: j-(d+2)-2-1-(d+1)-k.

enum class StructureKind { kA, kB1, kB2 };
const char* to_string(StructureKind kind) noexcept;

struct StructureHit {
  Vertex u = 0;
  StructureKind kind = StructureKind::kA;
  Vertex j = 0;
  Vertex k = 0;
  // False when j or k falls inside the window (only possible for n = 4).
  bool contractible = true;

  friend bool operator==(const StructureHit&, const StructureHit&) = default;
};

// Every (u, kind) with u in 1..n whose three edges are in the tour, ordered
// by (u, kind).
std::vector<StructureHit> detect_structures(const Tour& tour);

// The hit moved to u = 1 (B1 reflected to B2 first) together with the
// relabeled tour. relabeling[v-1] is the new label of original vertex v.
struct NormalizedHit {
  Tour tour;
  StructureHit hit;
  std::vector<Vertex> relabeling;
};
NormalizedHit normalize(const Tour& tour, const StructureHit& hit);

// ---------------------------------------------------------------------------
// Contraction of the window {1, 2, d+1, d+2}

// New label of s outside the window: s-2 for s <= d, s-4 for s > d+2.
Vertex contracted_label(const Instance& inst, Vertex s);

// Cost of edge {s, t} before contraction (on n vertices) and of its image
// after contraction (on n-4 vertices), from the closed-form case split.
struct EdgeDelta {
  int new_length = 0;
  long new_cost = 0;
  long delta = 0;  // old cost - new cost, always 0 or 2
};
EdgeDelta per_edge_delta(const Instance& inst, Vertex s, Vertex t);

// Deletes 1, 2, d+1, d+2, joins j and k, and relabels. Requires a normalized
// (u = 1) hit of kind A or B2; B1 must be reflected first (DomainError).
Tour contract(const Tour& tour, const StructureHit& hit);

struct EdgeChange {
  Edge before;
  Edge after;
  long old_cost = 0;
  long new_cost = 0;
};

struct ContractionReport {
  ContractionReport(Tour before, Tour after, StructureHit hit)
      : original(std::move(before)), contracted(std::move(after)), source(hit) {}

  Tour original;
  Tour contracted;
  StructureHit source;              // as detected, original labels
  std::vector<Vertex> normalization;  // original label -> normalized label
  StructureKind kind = StructureKind::kB2;  // A or B2 after normalization
  Vertex j = 0;  // normalized labels
  Vertex k = 0;

  long chain_cost = 0;     // five chain edges at n
  long new_edge_cost = 0;  // c'_{j',k'} at n-4
  long chain_delta = 0;    // chain_cost - new_edge_cost
  std::vector<EdgeChange> edges;  // every other tour edge
  long reduced_edges = 0;         // edges whose cost fell by 2
  long aggregate_delta = 0;       // chain_delta + sum of per-edge deltas
  long direct_delta = 0;          // circlet cost before - circlet cost after

  bool bound_holds() const noexcept { return aggregate_delta >= 4; }
  // For A: chain delta >= 4, or chain delta == 2 with a reduced edge. For B2
  // the chain alone drops by at least 4.
  bool dichotomy_holds() const noexcept;
};

// Requires a normalized hit (see contract).
ContractionReport aggregate_delta(const Tour& tour, const StructureHit& hit);
// Normalizes any contractible hit first and records the relabeling.
ContractionReport analyze_hit(const Tour& tour, const StructureHit& hit);

// `contract <kind> u=<u> j=<j> k=<k> delta=<int>`, plus one line per edge
// when verbose.
std::string format_report(const ContractionReport& report, bool verbose);

// ---------------------------------------------------------------------------
// Chain case analysis. With j, k outside the window and j != k:
//   B2 chain: c_{j,1} + c_{d+1,k} - c'_{j',k'} - 2
//   A chain:  c_{j,d+2} + c_{d+1,k} - c'_{j',k'} - 1
// both nonnegative; chain delta = value + chain_threshold(kind).

int chain_threshold(StructureKind kind);

// Closed form selected by the parities of j, k and their top/bottom groups.
long chain_case_value(const Instance& inst, StructureKind variant, Vertex j,
                         Vertex k);
// The same quantity from raw edge costs.
long chain_slack_direct(const Instance& inst, StructureKind variant, Vertex j,
                        Vertex k);
// The four configurations in which the A-chain value can vanish.
bool is_enumerated_zero_case(const Instance& inst, Vertex j, Vertex k);

// ---------------------------------------------------------------------------
// Parity groups of S = [n] \ {1, 2, d+1, d+2}

enum class VertexGroup { kTopOdd, kTopEven, kBottomOdd, kBottomEven };

std::optional<VertexGroup> vertex_group(const Instance& inst, Vertex v);
std::vector<Vertex> group_members(const Instance& inst, VertexGroup g);
// S_1 = {top odd, bottom even}; S_2 = {top even, bottom odd}.
bool in_s2(VertexGroup g) noexcept;
// Edges of the 4-cycle G°: between groups on opposite sides of S_1 / S_2.
bool is_g_circle_edge(VertexGroup a, VertexGroup b) noexcept;

struct GroupWalk {
  std::vector<VertexGroup> walk;  // groups along the tour path j -> k in S
  bool uses_only_g_circle = false;
  bool all_deltas_zero = false;  // same predicate via per_edge_delta
  std::array<int, 4> visit_counts{};
  bool endpoints_in_s2 = false;

  bool counts_equal() const noexcept;
};

// Requires a normalized hit of kind A or B2.
GroupWalk group_walk_trace(const Tour& tour, const StructureHit& hit);

}  // namespace circlet
