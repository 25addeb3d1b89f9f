#include "circlet/inequality.hpp"

#include <string>

#include "circlet/errors.hpp"

namespace circlet {

CircletCoefficients circlet_coeffs(const Instance& inst) {
  inst.require_circlet();
  const int d = inst.d();
  CircletCoefficients k;
  k.c.resize(d);
  for (int i = 1; i <= d; ++i) k.c[i - 1] = i % 2 == 1 ? i : d - i;
  k.rhs = inst.n() - 2;
  return k;
}

TTCoefficients tt_coeffs(const Instance& inst) {
  const auto base = circlet_coeffs(inst);
  const long n = inst.n();
  const long shift = inst.d() - 2;
  TTCoefficients k;
  k.f.reserve(base.c.size());
  for (long c : base.c) k.f.push_back(c + shift);
  k.rhs = n * n / 2 - n - 2;
  return k;
}

Rational evaluate(std::span<const long> coeffs, const LengthProfile& profile) {
  if (static_cast<int>(coeffs.size()) != profile.dimension())
    throw DimensionMismatchError(
        "coefficient vector has " + std::to_string(coeffs.size()) +
        " entries, profile has " + std::to_string(profile.dimension()));
  Rational total;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    total += coeffs[i] * profile.totals()[i];
  return total;
}

CircletCheck check_circlet(const Instance& inst, const LengthProfile& profile) {
  const auto k = circlet_coeffs(inst);
  CircletCheck out;
  out.value = evaluate(k, profile);
  out.slack = out.value - k.rhs;
  out.satisfied = out.slack >= 0;
  return out;
}

Rational circlet_lower_bound(const Instance& inst, const LengthProfile& profile) {
  inst.require_circlet();
  if (profile.dimension() != inst.d())
    throw DimensionMismatchError("profile dimension differs from d");
  for (const auto& t : profile.totals())
    if (t < 0) throw DomainError("profile has a negative entry");
  if (profile.sum() != inst.n())
    throw DomainError("profile sums to " + to_string(profile.sum()) +
                      ", expected " + std::to_string(inst.n()));
  return Rational(2 * inst.n()) - profile.at(1) - 2 * profile.at(inst.d());
}

TriangleFormCheck tt_triangle_check(const Instance& inst) {
  const auto k = tt_coeffs(inst);
  const int n = inst.n();
  auto f = [&](Vertex a, Vertex b) { return k.at(edge_length(inst, a, b)); };
  TriangleFormCheck out{true, true};
  for (Vertex j = 1; j <= n; ++j) {
    bool tight = false;
    for (Vertex i = 1; i <= n; ++i) {
      if (i == j) continue;
      for (Vertex l = 1; l <= n; ++l) {
        if (l == i || l == j) continue;
        const long lhs = f(i, j) + f(j, l);
        if (lhs < f(i, l)) out.triangle = false;
        if (lhs == f(i, l)) tight = true;
      }
    }
    if (!tight) out.tight_everywhere = false;
  }
  return out;
}

std::optional<std::pair<Vertex, Vertex>> tt_tight_witness(const Instance& inst,
                                                          Vertex j) {
  const auto k = tt_coeffs(inst);
  const int n = inst.n();
  if (!inst.contains(j)) throw DomainError("vertex out of range");
  auto f = [&](Vertex a, Vertex b) { return k.at(edge_length(inst, a, b)); };
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex l = 1; l <= n; ++l)
      if (i != j && l != j && i != l && f(i, j) + f(j, l) == f(i, l))
        return std::pair{i, l};
  return std::nullopt;
}

Rational circlet_strength(const Instance& inst) {
  inst.require_circlet();
  const long n = inst.n();
  return make_rational(n * n - 2 * n - 4, n * n - 3 * n);
}

Rational crown_strength(const Instance& inst) {
  inst.require_circlet();
  const long n = inst.n();
  if (n < 8) throw DomainError("crown strength needs n >= 8");
  return make_rational(3 * n * n - 12 * n - 8, 3 * n * n - 14 * n);
}

}  // namespace circlet
