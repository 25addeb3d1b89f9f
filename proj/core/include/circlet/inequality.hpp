#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "circlet/circulant.hpp"

namespace circlet {

// Per-length coefficients of sum_i c_i t_i >= rhs. c[0] is the coefficient of
// length 1.
struct CircletCoefficients {
  std::vector<long> c;
  long rhs = 0;

  long at(int length) const { return c.at(length - 1); }
};

// The circlet inequality: c_i = i for odd i, d - i for even i, rhs = n - 2.
CircletCoefficients circlet_coeffs(const Instance& inst);

// The same inequality in tight triangular form: every coefficient shifted by
// d - 2 and rhs = n^2/2 - n - 2.
struct TTCoefficients {
  std::vector<long> f;
  long rhs = 0;

  long at(int length) const { return f.at(length - 1); }
};

TTCoefficients tt_coeffs(const Instance& inst);

// Exact dot product; throws DimensionMismatchError when sizes differ.
Rational evaluate(std::span<const long> coeffs, const LengthProfile& profile);
inline Rational evaluate(const CircletCoefficients& k, const LengthProfile& p) {
  return evaluate(k.c, p);
}
inline Rational evaluate(const TTCoefficients& k, const LengthProfile& p) {
  return evaluate(k.f, p);
}

struct CircletCheck {
  bool satisfied = false;
  Rational value;
  Rational slack;  // value - (n - 2)
};

CircletCheck check_circlet(const Instance& inst, const LengthProfile& profile);

// 2n - t_1 - 2 t_d, a lower bound on the circlet value of any profile whose
// entries are nonnegative and sum to n. Throws DomainError otherwise.
Rational circlet_lower_bound(const Instance& inst, const LengthProfile& profile);

// Exhaustive check over vertex triples of the triangle inequality
// f_ij + f_jk >= f_ik and of a tight triple at every vertex.
struct TriangleFormCheck {
  bool triangle = false;
  bool tight_everywhere = false;
  bool ok() const noexcept { return triangle && tight_everywhere; }
};

TriangleFormCheck tt_triangle_check(const Instance& inst);

// Some (i, k) with f_ij + f_jk = f_ik, if one exists.
std::optional<std::pair<Vertex, Vertex>> tt_tight_witness(const Instance& inst,
                                                          Vertex j);

// (n^2 - 2n - 4) / (n^2 - 3n).
Rational circlet_strength(const Instance& inst);
// (3n^2 - 12n - 8) / (3n^2 - 14n); requires n >= 8.
Rational crown_strength(const Instance& inst);

}  // namespace circlet
