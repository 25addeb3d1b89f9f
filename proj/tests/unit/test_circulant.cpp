#include <gtest/gtest.h>

#include <random>

#include "circlet/caps.hpp"
#include "circlet/circulant.hpp"
#include "circlet/errors.hpp"
#include "circlet/text_format.hpp"
#include "oracles.hpp"

using namespace circlet;

TEST(EdgeLength, AdjacentWraparoundAndChord) {
  const Instance inst(12);
  EXPECT_EQ(edge_length(inst, 1, 2), 1);
  EXPECT_EQ(edge_length(inst, 1, 12), 1);
  EXPECT_EQ(edge_length(inst, 1, 7), 6);
}

TEST(EdgeLength, SymmetricAndBounded) {
  for (int n : {3, 4, 7, 12}) {
    const Instance inst(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const int l = edge_length(inst, i, j);
        EXPECT_EQ(l, edge_length(inst, j, i));
        EXPECT_GE(l, 1);
        EXPECT_LE(l, inst.d());
      }
  }
}

TEST(EdgeLength, RejectsLoopsAndOutOfRange) {
  const Instance inst(8);
  EXPECT_THROW(edge_length(inst, 3, 3), InvalidEdgeError);
  EXPECT_THROW(edge_length(inst, 0, 3), InvalidEdgeError);
  EXPECT_THROW(edge_length(inst, 1, 9), InvalidEdgeError);
  EXPECT_THROW(Edge::of(2, 2), InvalidEdgeError);
}

TEST(InstanceTest, CircletRequiresMultipleOfFour) {
  EXPECT_EQ(Instance::circlet(8).d(), 4);
  EXPECT_THROW(Instance::circlet(6), UnsupportedInstanceError);
  EXPECT_THROW(Instance::circlet(0), UnsupportedInstanceError);
  EXPECT_THROW(Instance(2), DomainError);
  EXPECT_NO_THROW(Instance(5));
}

TEST(InstanceTest, WrapMapsIntoOneToN) {
  const Instance inst(8);
  EXPECT_EQ(inst.wrap(0), 8);
  EXPECT_EQ(inst.wrap(9), 1);
  EXPECT_EQ(inst.wrap(-1), 7);
  EXPECT_EQ(inst.wrap(16), 8);
}

TEST(TourTest, CanonicalFormStartsAtOneWithSmallerNeighbour) {
  const Tour t({5, 6, 7, 8, 1, 2, 3, 4});
  EXPECT_EQ(t.order(), (std::vector<Vertex>{1, 2, 3, 4, 5, 6, 7, 8}));
  const Tour r({1, 8, 7, 6, 5, 4, 3, 2});
  EXPECT_EQ(r, t);
  EXPECT_EQ(Tour(t.order()), t);
}

TEST(TourTest, RejectsInvalidSequences) {
  EXPECT_THROW(Tour({1, 2}), DomainError);
  EXPECT_THROW(Tour({1, 2, 2, 4}), DomainError);
  EXPECT_THROW(Tour({1, 2, 5, 4}), DomainError);
}

TEST(TourTest, AdjacencyQueries) {
  const Tour t({1, 3, 2, 4});
  EXPECT_EQ(t.neighbors(1), (std::array<Vertex, 2>{3, 4}));
  EXPECT_TRUE(t.has_edge(3, 2));
  EXPECT_FALSE(t.has_edge(1, 2));
  EXPECT_EQ(t.other_neighbor(2, 3), 4);
  EXPECT_THROW(t.other_neighbor(2, 1), DomainError);
  EXPECT_EQ(t.edges().size(), 4u);
}

TEST(LengthProfileTest, KnownProfiles) {
  const Instance n8(8);
  const auto canonical = length_profile(n8, Tour({1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(canonical, LengthProfile::from_integers(std::vector<long>{8, 0, 0, 0}));
  const auto two_chords = length_profile(n8, Tour({1, 2, 3, 4, 8, 7, 6, 5}));
  EXPECT_EQ(two_chords, LengthProfile::from_integers(std::vector<long>{6, 0, 0, 2}));
  const auto small = length_profile(Instance(4), Tour({1, 3, 2, 4}));
  EXPECT_EQ(small, LengthProfile::from_integers(std::vector<long>{2, 2}));
  EXPECT_THROW(length_profile(n8, Tour({1, 2, 3, 4})), DimensionMismatchError);
}

TEST(LengthProfileTest, RotationAndReflectionInvariant) {
  std::mt19937_64 rng(7);
  for (int n : {8, 12, 16}) {
    const Instance inst(n);
    for (int trial = 0; trial < 200; ++trial) {
      const Tour t(oracle::random_cycle(n, rng));
      const auto p = length_profile(inst, t);
      EXPECT_EQ(p.sum(), n);
      EXPECT_EQ(length_profile(inst, reflect(t)), p);
      for (int m = 1; m < n; m += 3) EXPECT_EQ(length_profile(inst, rotate(t, m)), p);
    }
  }
}

TEST(ProjectWeights, HalfOneZeroAndIndicator) {
  const Instance inst(8);
  FractionalPoint x(inst);
  for (int v = 1; v <= 8; ++v) x.set(v, inst.wrap(v + 1), Rational(1, 2));
  for (int v = 1; v <= 4; ++v) x.set(v, v + 4, 1);
  EXPECT_EQ(project_weights(inst, x), LengthProfile::from_integers(std::vector<long>{4, 0, 0, 4}));
  EXPECT_EQ(project_weights(inst, FractionalPoint(inst)), LengthProfile::zeros(4));
  const Tour t({1, 3, 5, 2, 8, 6, 4, 7});
  EXPECT_EQ(project_weights(inst, indicator(t)), length_profile(inst, t));
}

TEST(FractionalPointTest, ZeroWeightsAreDropped) {
  FractionalPoint x{Instance(6)};
  x.set(1, 2, Rational(1, 3));
  x.add(2, 1, Rational(-1, 3));
  EXPECT_TRUE(x.support().empty());
  EXPECT_EQ(x, FractionalPoint(Instance(6)));
  x.set(4, 1, 2);
  EXPECT_EQ(x.weight(1, 4), 2);
  EXPECT_EQ(x.degree(4), 2);
  EXPECT_EQ(x.degree(5), 0);
}

TEST(TextFormat, ParsesEachDocumentKind) {
  EXPECT_EQ(std::get<Instance>(parse_document("n 8\n")).d(), 4);
  const auto tour = std::get<Tour>(parse_document("# comment\ntour 3 4 5 6 7 8 1 2\n"));
  EXPECT_EQ(tour.order(), (std::vector<Vertex>{1, 2, 3, 4, 5, 6, 7, 8}));
  const auto x = std::get<FractionalPoint>(parse_document("n 8\ne 5 1 2/2\n"));
  EXPECT_EQ(x.weight(1, 5), 1);
}

TEST(TextFormat, RoundTripIsBitExact) {
  FractionalPoint x{Instance(8)};
  x.set(3, 1, Rational(2, 4));
  x.set(1, 2, Rational(-7, 3));
  x.set(8, 5, 1);
  const std::string text = serialize(x);
  EXPECT_EQ(text, "n 8\ne 1 2 -7/3\ne 1 3 1/2\ne 5 8 1/1\n");
  EXPECT_EQ(serialize(parse_document(text)), text);
  const Tour t({2, 1, 3, 4});
  EXPECT_EQ(serialize(t), "n 4\ntour 1 2 4 3\n");
  EXPECT_EQ(std::get<Tour>(parse_document(serialize(t))), t);
}

TEST(TextFormat, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) {
    try {
      parse_document(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("n 8\nbogus 1\n"), 2);
  EXPECT_EQ(line_of("n 8\n\ne 1 2 x\n"), 3);
  EXPECT_EQ(line_of("n 8\ne 1 2 1/0\n"), 2);
  EXPECT_EQ(line_of("tour 1 2 2 3\n"), 1);
  EXPECT_EQ(line_of("e 1 2 1/2\n"), 1);
  EXPECT_EQ(line_of("n 8\ne 1 2 1/2\ne 2 1 1/3\n"), 3);
  EXPECT_EQ(line_of("n 8\ntour 1 2 3 4\n"), 2);
  EXPECT_EQ(line_of("n 8\ne 1 9 1/2\n"), 2);
  EXPECT_EQ(line_of("# only a comment\n"), 1);
}

TEST(RationalText, StrictParser) {
  EXPECT_EQ(*parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(*parse_rational("-5"), -5);
  EXPECT_FALSE(parse_rational("1/-2"));
  EXPECT_FALSE(parse_rational("1.5"));
  EXPECT_FALSE(parse_rational(""));
  EXPECT_FALSE(parse_rational("3/"));
  EXPECT_EQ(to_fraction_string(Rational(4)), "4/1");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_EQ(to_int64(Rational(-9)), -9);
  EXPECT_THROW(to_int64(Rational(1, 2)), DomainError);
}

TEST(CapsTest, ParsesSlashSeparatedOverrides) {
  const auto caps = Caps::parse("10/18/12");
  ASSERT_TRUE(caps);
  EXPECT_EQ(caps->enumeration, 10);
  EXPECT_EQ(caps->dp, 18);
  EXPECT_EQ(caps->rank, 12);
  const auto partial = Caps::parse("9");
  ASSERT_TRUE(partial);
  EXPECT_EQ(partial->enumeration, 9);
  EXPECT_EQ(partial->dp, 20);
  EXPECT_FALSE(Caps::parse("a/b"));
  EXPECT_FALSE(Caps::parse("1/2/3/4"));
  EXPECT_FALSE(Caps::parse("12/"));
}
