#include <gtest/gtest.h>

#include "circlet/errors.hpp"
#include "circlet/inequality.hpp"
#include "circlet/oracle.hpp"
#include "oracles.hpp"

using namespace circlet;

namespace {

LengthProfile ints(std::vector<long> v) { return LengthProfile::from_integers(v); }

// Calls visit on every vector of `parts` nonnegative integers summing to total.
template <typename Visit>
void each_composition(int total, int parts, Visit&& visit) {
  std::vector<long> t(parts, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == parts - 1) {
      t[i] = left;
      visit(t);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      t[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

}  // namespace

TEST(CircletCoeffs, KnownVectors) {
  EXPECT_EQ(circlet_coeffs(Instance(12)).c, (std::vector<long>{1, 4, 3, 2, 5, 0}));
  EXPECT_EQ(circlet_coeffs(Instance(12)).rhs, 10);
  EXPECT_EQ(circlet_coeffs(Instance(4)).c, (std::vector<long>{1, 0}));
  EXPECT_EQ(circlet_coeffs(Instance(8)).c, (std::vector<long>{1, 2, 3, 0}));
  EXPECT_THROW(circlet_coeffs(Instance(10)), UnsupportedInstanceError);
}

TEST(CircletCoeffs, ShapeForEveryMultipleOfFour) {
  for (int n = 4; n <= 64; n += 4) {
    const auto k = circlet_coeffs(Instance(n));
    const int d = n / 2;
    ASSERT_EQ(static_cast<int>(k.c.size()), d);
    EXPECT_EQ(k.at(1), 1);
    EXPECT_EQ(k.at(d), 0);
    for (int i = 2; i < d; ++i) {
      EXPECT_GE(k.at(i), 2) << "n=" << n << " i=" << i;
      EXPECT_EQ(k.at(i), oracle::coeff(n, i));
    }
  }
}

TEST(Evaluate, ExamplesAndDimensionCheck) {
  EXPECT_EQ(evaluate(circlet_coeffs(Instance(12)), ints({12, 0, 0, 0, 0, 0})), 12);
  EXPECT_EQ(evaluate(circlet_coeffs(Instance(8)), ints({6, 0, 0, 2})), 6);
  EXPECT_EQ(evaluate(circlet_coeffs(Instance(8)), ints({4, 0, 0, 4})), 4);
  EXPECT_THROW(evaluate(circlet_coeffs(Instance(8)), ints({1, 2})), DimensionMismatchError);
}

TEST(CheckCircletTest, SlackSigns) {
  const Instance inst(8);
  auto tight = check_circlet(inst, ints({6, 0, 0, 2}));
  EXPECT_TRUE(tight.satisfied);
  EXPECT_EQ(tight.slack, 0);
  auto half = check_circlet(inst, ints({4, 0, 0, 4}));
  EXPECT_FALSE(half.satisfied);
  EXPECT_EQ(half.slack, -2);
  auto canonical = check_circlet(inst, ints({8, 0, 0, 0}));
  EXPECT_TRUE(canonical.satisfied);
  EXPECT_EQ(canonical.slack, 2);
}

TEST(CircletLowerBound, ExamplesAndDomain) {
  const Instance inst(8);
  EXPECT_EQ(circlet_lower_bound(inst, ints({8, 0, 0, 0})), 8);
  EXPECT_EQ(circlet_lower_bound(inst, ints({6, 0, 0, 2})), 6);
  EXPECT_EQ(circlet_lower_bound(inst, ints({0, 8, 0, 0})), 16);
  EXPECT_THROW(circlet_lower_bound(inst, ints({1, 0, 0, 0})), DomainError);
  EXPECT_THROW(circlet_lower_bound(inst, ints({9, -1, 0, 0})), DomainError);
}

TEST(CircletLowerBound, ChainHoldsOnEveryIntegerProfile) {
  for (int n : {4, 8, 12}) {
    const Instance inst(n);
    const auto k = circlet_coeffs(inst);
    long checked = 0;
    each_composition(n, n / 2, [&](const std::vector<long>& t) {
      const auto p = ints(t);
      EXPECT_GE(evaluate(k, p), circlet_lower_bound(inst, p));
      ++checked;
    });
    EXPECT_GT(checked, 0);
  }
}

TEST(TTCoeffs, VectorsAndRightHandSide) {
  const auto t8 = tt_coeffs(Instance(8));
  EXPECT_EQ(t8.f, (std::vector<long>{3, 4, 5, 2}));
  EXPECT_EQ(t8.rhs, 22);
  const auto t12 = tt_coeffs(Instance(12));
  EXPECT_EQ(t12.f, (std::vector<long>{5, 8, 7, 6, 9, 4}));
  EXPECT_EQ(t12.rhs, 58);
  for (int n = 4; n <= 40; n += 4) {
    const auto c = circlet_coeffs(Instance(n));
    const auto f = tt_coeffs(Instance(n));
    const int d = n / 2;
    for (int i = 1; i <= d; ++i) {
      EXPECT_EQ(f.at(i) - c.at(i), d - 2);
      EXPECT_GE(f.at(i), d - 2);
      EXPECT_LE(f.at(i), 2 * d - 3);
    }
  }
}

TEST(TTCoeffs, ShiftIsDegreeMultipleOnEveryTour) {
  const Instance inst(8);
  const auto c = circlet_coeffs(inst);
  const auto f = tt_coeffs(inst);
  const long shift = 8 * (4 - 2);
  for_each_tour(inst, [&](std::span<const Vertex> order) {
    const auto p = LengthProfile::from_integers(integer_length_profile(inst, order));
    EXPECT_EQ(evaluate(f, p) - evaluate(c, p), shift);
  });
}

TEST(TriangleForm, HoldsAndHasWitnesses) {
  for (int n : {8, 12, 16}) EXPECT_TRUE(tt_triangle_check(Instance(n)).ok()) << n;
  for (int n : {8, 12}) {
    const Instance inst(n);
    const int d = n / 2;
    const auto f = tt_coeffs(inst);
    EXPECT_EQ(f.at(edge_length(inst, 1, d)),
              f.at(edge_length(inst, 1, d + 1)) + f.at(edge_length(inst, d + 1, d)));
    for (Vertex j = 1; j <= n; ++j) EXPECT_TRUE(tt_tight_witness(inst, j)) << j;
  }
}

TEST(Strength, ClosedForms) {
  EXPECT_EQ(circlet_strength(Instance(8)), Rational(11, 10));
  EXPECT_EQ(crown_strength(Instance(8)), Rational(11, 10));
  EXPECT_EQ(circlet_strength(Instance(12)), Rational(29, 27));
  EXPECT_EQ(crown_strength(Instance(12)), Rational(35, 33));
  EXPECT_THROW(crown_strength(Instance(4)), DomainError);
}

TEST(Strength, CircletDominatesCrownStrictlyAfterEight) {
  for (int n = 8; n <= 80; n += 4) {
    const Instance inst(n);
    if (n == 8)
      EXPECT_EQ(circlet_strength(inst), crown_strength(inst));
    else
      EXPECT_GT(circlet_strength(inst), crown_strength(inst)) << n;
  }
}
