#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "sylgal/witness.hpp"

using namespace sylgal;

namespace {

ColoredPoint pt(long x, long y, Colour c = Colour::Bicoloured) { return {Rational(x), Rational(y), c}; }

ColoredPointSet grid3() {
  std::vector<ColoredPoint> v;
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y) v.push_back(pt(x, y));
  return ColoredPointSet(v);
}

// Collinearity straight from the rational determinant.
bool collinear3(const ColoredPoint& p, const ColoredPoint& q, const ColoredPoint& r) {
  return (q.x - p.x) * (r.y - p.y) == (q.y - p.y) * (r.x - p.x);
}

// Least (i, j, colour) pair with no third point of the other colour on its line.
std::optional<std::tuple<int, int, Colour>> brute_least_witness(const ColoredPointSet& s) {
  const int n = int(s.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (Colour which : {Colour::RedOnly, Colour::BlueOnly}) {
        auto has = [&](Colour c, Colour w) { return w == Colour::RedOnly ? has_red(c) : has_blue(c); };
        if (!has(s[i].colour, which) || !has(s[j].colour, which)) continue;
        Colour other = which == Colour::RedOnly ? Colour::BlueOnly : Colour::RedOnly;
        bool ok = true;
        for (int k = 0; k < n && ok; ++k)
          if (k != i && k != j && collinear3(s[i], s[j], s[k]) && has(s[k].colour, other)) ok = false;
        if (ok) return std::tuple{i, j, which};
      }
  return std::nullopt;
}

ColoredPointSet random_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(3, 30), coord(-4, 4), den(1, 3), colour(1, 3);
  const int n = size(rng);
  std::vector<ColoredPoint> v;
  while (int(v.size()) < n) {
    ColoredPoint p{Rational(coord(rng), den(rng)), Rational(coord(rng), den(rng)), Colour(colour(rng))};
    bool dup = false;
    for (const auto& q : v) dup = dup || (q.x == p.x && q.y == p.y);
    if (!dup) v.push_back(p);
  }
  return ColoredPointSet(v);
}

}  // namespace

TEST(Witness, CollinearPoints) {
  ColoredPointSet s({pt(0, 0, Colour::RedOnly), pt(1, 1, Colour::BlueOnly), pt(5, 5)});
  auto c = find_witness(s);
  EXPECT_EQ(c.kind, WitnessCertificate::Kind::Collinear);
  EXPECT_EQ(c.line, (LineCoeffs{1, -1, 0}));
  EXPECT_TRUE(verify_certificate(s, c));
}

TEST(Witness, GeneralPosition) {
  ColoredPointSet s({pt(0, 0), pt(1, 0), pt(0, 1), pt(3, 7)});
  auto c = find_witness(s);
  ASSERT_EQ(c.kind, WitnessCertificate::Kind::Witness);
  EXPECT_EQ(c.on_line.size(), 2u);
  EXPECT_EQ(c.a, 0);
  EXPECT_EQ(c.b, 1);
  EXPECT_TRUE(verify_certificate(s, c));
}

TEST(Witness, GridHasOrdinaryLine) {
  auto s = grid3();
  auto c = find_witness(s);
  ASSERT_EQ(c.kind, WitnessCertificate::Kind::Witness);
  EXPECT_EQ(c.on_line.size(), 2u);
  // (0,0),(0,1),(0,2) and (0,0),(1,0),(2,0) are full; (0,0),(1,2) is the first 2-point line
  EXPECT_EQ(c.a, 0);
  EXPECT_EQ(c.b, 5);
  EXPECT_TRUE(verify_certificate(s, c));
  // a hand-checked ordinary line of the grid
  auto l = line_through(pt(0, 1), pt(1, 2));
  int on = 0;
  for (const auto& p : s.points()) on += l.contains(p);
  EXPECT_EQ(on, 2);
}

TEST(Witness, ForgedCertificatesFail) {
  auto s = grid3();
  WitnessCertificate collinear;
  collinear.kind = WitnessCertificate::Kind::Collinear;
  collinear.line = line_through(s[0], s[1]);
  EXPECT_FALSE(verify_certificate(s, collinear));

  auto c = find_witness(s);
  auto forged = c;
  forged.line = line_through(s[1], s[2]);  // misses A
  EXPECT_FALSE(verify_certificate(s, forged));
  forged = c;
  forged.on_line.pop_back();
  EXPECT_FALSE(verify_certificate(s, forged));
  forged = c;
  forged.line.a *= 2;
  forged.line.b *= 2;
  forged.line.c *= 2;
  EXPECT_FALSE(verify_certificate(s, forged));
  // a blocked pair: the full row has a third bicoloured point
  forged = c;
  forged.a = 0;
  forged.b = 1;
  forged.line = line_through(s[0], s[1]);
  forged.on_line = {{0, s[0].colour}, {1, s[1].colour}, {2, s[2].colour}};
  EXPECT_FALSE(verify_certificate(s, forged));
}

TEST(Witness, RejectsBadInput) {
  EXPECT_THROW(find_witness(ColoredPointSet({pt(0, 0)})), InvalidArguments);
  EXPECT_THROW(ColoredPointSet({pt(1, 2), pt(1, 2)}), InvalidArguments);
}

TEST(Witness, RandomSetsAlwaysCertify) {
  std::mt19937_64 rng(20240601);
  int witnesses = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto s = random_set(rng);
    auto c = find_witness(s);
    ASSERT_TRUE(verify_certificate(s, c)) << trial;
    auto brute = brute_least_witness(s);
    if (c.kind == WitnessCertificate::Kind::Collinear) {
      for (std::size_t k = 2; k < s.size(); ++k) EXPECT_TRUE(collinear3(s[0], s[1], s[k]));
      continue;
    }
    ++witnesses;
    ASSERT_TRUE(brute);
    EXPECT_EQ(std::tuple(c.a, c.b, c.shared), *brute) << trial;
    // the line has at most two bicoloured points and one colour covers all of it
    int bicoloured = 0;
    bool all_shared = true;
    for (auto [k, col] : c.on_line) {
      bicoloured += col == Colour::Bicoloured;
      all_shared = all_shared && detail::has_colour(col, c.shared);
    }
    EXPECT_LE(bicoloured, 2);
    EXPECT_TRUE(all_shared);
  }
  EXPECT_GT(witnesses, 900);
}

TEST(Witness, AffineInvariance) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_set(rng);
    Rational scale(3, 7), dx(-5, 2), dy(11, 3);
    std::vector<ColoredPoint> moved;
    for (const auto& p : s.points()) moved.push_back({p.x * scale + dx, p.y * scale + dy, p.colour});
    ColoredPointSet t(moved);
    auto a = find_witness(s), b = find_witness(t);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.a, b.a);
    EXPECT_EQ(a.b, b.b);
    EXPECT_EQ(a.on_line, b.on_line);
    EXPECT_TRUE(verify_certificate(t, b));
  }
}

TEST(Witness, SpecialColourings) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_set(rng);
    std::vector<ColoredPoint> all_both, two_colour;
    for (std::size_t i = 0; i < s.size(); ++i) {
      all_both.push_back({s[i].x, s[i].y, Colour::Bicoloured});
      two_colour.push_back({s[i].x, s[i].y, i % 2 ? Colour::RedOnly : Colour::BlueOnly});
    }
    auto sg = find_witness(ColoredPointSet(all_both));
    if (sg.kind == WitnessCertificate::Kind::Witness) {
      EXPECT_EQ(sg.on_line.size(), 2u);  // an ordinary line
    }
    ColoredPointSet mr_set(two_colour);
    auto mr = find_witness(mr_set);
    if (mr.kind == WitnessCertificate::Kind::Witness) {
      for (auto [k, col] : mr.on_line) EXPECT_EQ(col, mr.shared);  // a monochromatic line
    }
    EXPECT_TRUE(verify_certificate(mr_set, mr));
  }
}

TEST(Witness, PointFileRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = random_set(rng);
    std::ostringstream out;
    write_point_set(out, s);
    std::istringstream in(out.str());
    EXPECT_EQ(read_point_set(in), s);
  }
  std::istringstream in("# sample\npoint 1/2 -3 R\n\npoint +4 6/4 RB\n");
  auto s = read_point_set(in);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1].y, Rational(3, 2));
  for (const char* bad : {"point 1 2\n", "pt 1 2 R\n", "point 1/0 2 R\n", "point x 2 R\n", "point 1 2 G\n"}) {
    std::istringstream b(bad);
    EXPECT_THROW(read_point_set(b), ParseError) << bad;
  }
}
