#include "circlet/facet.hpp"

#include <set>

#include "circlet/errors.hpp"
#include "circlet/exact_rank.hpp"
#include "circlet/inequality.hpp"

namespace circlet {

int edge_index(int n, Edge e) {
  const int lo = e.lo - 1;
  return lo * n - lo * (lo + 1) / 2 + (e.hi - e.lo - 1);
}

std::vector<int> incidence_vector(const Tour& tour) {
  const int n = tour.size();
  std::vector<int> chi(n * (n - 1) / 2, 0);
  for (const Edge& e : tour.edges()) chi[edge_index(n, e)] = 1;
  return chi;
}

std::vector<Tour> base_tours(const Instance& inst) {
  inst.require_circlet();
  const int n = inst.n(), d = inst.d();
  std::vector<Vertex> order;
  for (Vertex v = 1; v <= d; ++v) order.push_back(v);
  for (Vertex v = n; v > d; --v) order.push_back(v);
  const Tour base(order);
  std::vector<Tour> out;
  for (int m = 0; m < d; ++m) out.push_back(rotate(base, m));
  return out;
}

Tour k_tour(const Instance& inst, int k) {
  inst.require_circlet();
  const int n = inst.n(), d = inst.d();
  if (k < 3 || k > d)
    throw DomainError("k must lie in [3, " + std::to_string(d) + "], got " +
                      std::to_string(k));
  const int first = d - k + 2;
  std::vector<Vertex> order;
  for (Vertex v = 1; v < first; ++v) order.push_back(v);
  // Zig-zag through columns first..d: column c pairs c with c+d.
  for (int c = first; c <= d; ++c) {
    const bool down = (c - first) % 2 == 0;
    order.push_back(down ? c : c + d);
    order.push_back(down ? c + d : c);
  }
  for (Vertex v = n - k + 1; v > d; --v) order.push_back(v);
  return Tour(order);
}

std::vector<Tour> full_family(const Instance& inst) {
  std::vector<Tour> out = base_tours(inst);
  for (int k = 3; k <= inst.d(); ++k) {
    const Tour t = k_tour(inst, k);
    for (int m = 0; m < inst.n(); ++m) out.push_back(rotate(t, m));
  }
  return out;
}

FacetCertificate certify_facet(const Instance& inst, const Caps& caps) {
  inst.require_circlet();
  const int n = inst.n();
  if (n > caps.rank)
    throw BudgetExceededError("facet rank at n=" + std::to_string(n) +
                              " exceeds the cap " + std::to_string(caps.rank));
  const auto family = full_family(inst);
  const auto k = circlet_coeffs(inst);

  FacetCertificate cert;
  cert.n = n;
  cert.family = static_cast<int>(family.size());
  cert.expected = n * (n - 3) / 2;
  cert.tight = true;
  for (const Tour& t : family)
    if (evaluate(k, length_profile(inst, t)) != k.rhs) cert.tight = false;
  cert.distinct = std::set<Tour>(family.begin(), family.end()).size() == family.size();

  IntMatrix m(cert.family, n * (n - 1) / 2);
  for (int r = 0; r < cert.family; ++r) {
    const auto chi = incidence_vector(family[r]);
    for (std::size_t c = 0; c < chi.size(); ++c) m(r, static_cast<int>(c)) = chi[c];
  }
  cert.rank = exact_rank(std::move(m));
  return cert;
}

std::string format_certificate(const FacetCertificate& cert) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  return "facet n=" + std::to_string(cert.n) + " family=" +
         std::to_string(cert.family) + " rank=" + std::to_string(cert.rank) +
         " tight=" + b(cert.tight) + " valid=" + b(cert.valid());
}

}  // namespace circlet
