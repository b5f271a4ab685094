#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sylgal/galois.hpp"
#include "sylgal/geometry.hpp"

using namespace sylgal;

namespace {

Geometry ag23() { return ag_as_geometry(2, field_make(3, 1)).geometry; }
Geometry pg32() { return pg_as_geometry(3, field_make(2, 1)).geometry; }

}  // namespace

TEST(Validate, FanoIsValid) { EXPECT_FALSE(validate(oracle::fano()).has_value()); }

TEST(Validate, PairOnTwoLines) {
  Geometry g(4, {{0, 1, 2}, {0, 1, 3}});
  auto v = validate(g);
  ASSERT_TRUE(v.has_value());
  EXPECT_NE(v->find("{0,1}"), std::string::npos);
}

TEST(Validate, NoLinesIsValid) { EXPECT_FALSE(validate(Geometry(3, {})).has_value()); }

TEST(Validate, ShortLineAndRangeErrors) {
  EXPECT_TRUE(validate(Geometry(3, {{0, 1}})).has_value());
  EXPECT_TRUE(validate(Geometry(3, {{0, 1, 5}})).has_value());
  EXPECT_TRUE(validate(Geometry(0, {})).has_value());
}

TEST(LineThrough, FanoLine) {
  auto l = line_through(oracle::fano(), 0, 1);
  EXPECT_EQ(l, (PointList{0, 1, 2}));
}

TEST(LineThrough, ImplicitTwoLine) { EXPECT_EQ(line_through(Geometry(4, {}), 2, 0), (PointList{0, 2})); }

TEST(LineThrough, SamePointRejected) { EXPECT_THROW(line_through(oracle::fano(), 3, 3), InvalidArguments); }

TEST(LineThrough, AffinePlaneOrderThreeHasOnlyThreePointLines) {
  auto g = ag23();
  EXPECT_EQ(g.n_lines(), 12u);
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b) EXPECT_EQ(line_through(g, a, b).size(), 3u);
}

TEST(Closure, FanoNonCollinearTriplesGenerateAll) {
  auto g = oracle::fano();
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) {
        bool collinear = g.line_index(a, b) >= 0 && g.line_index(a, b) == g.line_index(a, c);
        EXPECT_EQ(closure(g, {a, b, c}).size(), collinear ? 3u : 7u);
      }
  EXPECT_EQ(closure(g, {0, 1}).points, (PointList{0, 1, 2}));
}

TEST(Closure, PG32TriplesGenerateFanoPlanes) {
  auto g = pg32();
  auto f = closure(g, {0, 1, 3});
  ASSERT_FALSE(g.line_index(0, 1) >= 0 && g.line_index(0, 1) == g.line_index(0, 3));
  EXPECT_EQ(f.size(), 7u);
  auto sub = g.induced(f.points);
  EXPECT_EQ(sub.n_lines(), 7u);
}

TEST(Closure, IdempotentAndMonotone) {
  auto g = ag_as_geometry(3, field_make(3, 1)).geometry;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    PointList x, y;
    for (int p = 0; p < g.n_points(); ++p) {
      int r = int(rng() % 20);
      if (r == 0) x.push_back(p);
      if (r <= 1) y.push_back(p);
    }
    auto cx = closure(g, x);
    EXPECT_EQ(closure(g, cx.points), cx);
    auto cy = closure(g, y);
    for (Point p : cx.points) EXPECT_TRUE(cy.contains(p));
  }
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(Geometry(5, {{0, 1, 2, 3, 4}})), 1);
  EXPECT_EQ(dimension(ag23()), 2);
  EXPECT_EQ(dimension(pg32()), 3);
  EXPECT_EQ(dimension(oracle::fano()), 2);
  EXPECT_EQ(dimension(Geometry(4, {})), 3);
  EXPECT_EQ(dimension(ag_as_geometry(3, field_make(3, 1)).geometry), 3);
}

TEST(Contraction, PG32AtPointIsFano) {
  auto r = contraction(pg32(), Flat{{0}});
  EXPECT_EQ(r.geometry.n_points(), 7);
  EXPECT_EQ(r.geometry.n_lines(), 7u);
  EXPECT_TRUE(oracle::brute_isomorphism(r.geometry, oracle::fano()).has_value());
}

TEST(Contraction, FanoAtPointIsThreeCollinearPoints) {
  auto r = contraction(oracle::fano(), Flat{{0}});
  EXPECT_EQ(r.geometry.n_points(), 3);
  EXPECT_TRUE(r.geometry.is_collinear());
}

TEST(Contraction, AG33AtPointHasThirteenPoints) {
  auto g = ag_as_geometry(3, field_make(3, 1)).geometry;
  auto r = contraction(g, Flat{{0}});
  EXPECT_EQ(r.geometry.n_points(), 13);
  EXPECT_TRUE(r.geometry.valid());
  std::set<Point> seen;
  for (const auto& f : r.fibers)
    for (Point p : f) EXPECT_TRUE(seen.insert(p).second);
  EXPECT_EQ(seen.size(), 26u);
}

TEST(Contraction, RejectsNonClosedOrImproperFlats) {
  auto g = oracle::fano();
  EXPECT_THROW(contraction(g, Flat{{0, 1}}), InvalidArguments);
  EXPECT_THROW(contraction(g, Flat{{0, 1, 2, 3, 4, 5, 6}}), InvalidArguments);
  EXPECT_THROW(contraction(g, Flat{{}}), InvalidArguments);
}

TEST(Contraction, ResiduesOfConstructedSpacesAreValid) {
  for (auto g : {pg32(), ag_as_geometry(3, field_make(3, 1)).geometry, oracle::fano(), ag23()})
    for (Point p = 0; p < g.n_points(); ++p) EXPECT_TRUE(contraction(g, Flat{{p}}).geometry.valid());
}

TEST(RichPoints, PG32HasNone) { EXPECT_TRUE(rich_points(pg32()).empty()); }

// Lines through a point of AG(3,3) form a projective plane of order 3 in the
// residue, whose lines have 4 points, so every point is rich.
TEST(RichPoints, AG33EveryPointRich) {
  auto g = ag_as_geometry(3, field_make(3, 1)).geometry;
  auto r = contraction(g, Flat{{0}});
  EXPECT_EQ(r.geometry.n_lines(), 13u);
  for (const auto& l : r.geometry.lines()) EXPECT_EQ(l.size(), 4u);
  EXPECT_EQ(rich_points(g).size(), 27u);
}

TEST(RichPoints, AG35EveryPointRich) {
  auto g = ag_as_geometry(3, field_make(5, 1)).geometry;
  auto r = contraction(g, Flat{{0}});
  EXPECT_EQ(r.geometry.n_points(), 31);
  for (const auto& l : r.geometry.lines()) EXPECT_GE(l.size(), 5u);
  EXPECT_EQ(rich_points(g).size(), 125u);
}

TEST(RichPoints, PlanarRejected) { EXPECT_THROW(rich_points(oracle::fano()), UnsupportedDimension); }

TEST(KSG, Examples) {
  EXPECT_TRUE(is_k_sg(oracle::fano(), 3));
  EXPECT_FALSE(is_k_sg(oracle::fano(), 4));
  EXPECT_TRUE(is_k_sg(pg_as_geometry(2, field_make(3, 1)).geometry, 4));
  EXPECT_FALSE(is_k_sg(Geometry(3, {}), 3));
  EXPECT_TRUE(is_k_sg(Geometry(3, {}), 2));
  EXPECT_THROW(is_k_sg(oracle::fano(), 1), InvalidArguments);
}

TEST(Planes, PG32HasFifteenPlanes) {
  auto ps = planes(pg32());
  EXPECT_EQ(ps.size(), 15u);
  for (const auto& f : ps) EXPECT_EQ(f.size(), 7u);
}

TEST(Degree, CountsImplicitTwoLines) {
  Geometry g(5, {{0, 1, 2}});
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_EQ(g.degree(3), 4);
  EXPECT_EQ(g.two_line_count(), 7);
}

TEST(Geometry, PermutedAndEquality) {
  auto g = oracle::fano();
  std::vector<int> sigma{1, 2, 0, 3, 4, 5, 6};
  auto h = g.permuted(sigma);
  EXPECT_TRUE(h.valid());
  EXPECT_EQ(h.permuted({2, 0, 1, 3, 4, 5, 6}), g);
}
