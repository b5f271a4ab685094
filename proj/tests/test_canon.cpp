#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sylgal/canon.hpp"
#include "sylgal/galois.hpp"

using namespace sylgal;

namespace {

std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

std::vector<Geometry> samples() {
  return {oracle::fano(),
          ag_as_geometry(2, field_make(3, 1)).geometry,
          pg_as_geometry(2, field_make(3, 1)).geometry,
          pg_as_geometry(3, field_make(2, 1)).geometry,
          ag_as_geometry(2, field_make(2, 2)).geometry,
          Geometry(6, {{0, 1, 2}, {0, 3, 4}}),
          Geometry(5, {}),
          Geometry(4, {{0, 1, 2, 3}})};
}

}  // namespace

TEST(CanonicalForm, InvariantUnderRelabelling) {
  std::mt19937 rng(2024);
  for (const auto& g : samples()) {
    auto base = canonical_form(g);
    for (int t = 0; t < 1000; ++t) {
      auto sigma = random_perm(g.n_points(), rng);
      ASSERT_EQ(canonical_form(g.permuted(sigma)), base);
    }
  }
}

TEST(CanonicalForm, ColouredInvariantUnderRelabelling) {
  std::mt19937 rng(5);
  auto g = ag_as_geometry(2, field_make(3, 1)).geometry;
  for (int t = 0; t < 200; ++t) {
    Coloring c(9);
    for (auto& x : c) x = Colour(1 + rng() % 3);
    auto base = canonical_form(g, c);
    auto sigma = random_perm(9, rng);
    EXPECT_EQ(canonical_form(g.permuted(sigma), permuted(c, sigma)), base);
  }
}

TEST(CanonicalForm, DistinguishesDifferentGeometries) {
  auto s = samples();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_NE(canonical_form(s[i]), canonical_form(s[j]));
  auto g = oracle::fano();
  EXPECT_NE(canonical_form(g, uniform_coloring(7, Colour::Bicoloured)), canonical_form(g));
}

TEST(CanonicalForm, AgreesWithBruteIsomorphismOnSmallGeometries) {
  // All linear spaces on 6 points built from random line families.
  std::mt19937 rng(99);
  std::vector<Geometry> pool;
  for (int t = 0; t < 300; ++t) {
    std::vector<Line> lines;
    std::vector<std::vector<char>> used(7, std::vector<char>(7, 0));
    for (int tries = 0; tries < 6; ++tries) {
      Line l;
      for (int p = 0; p < 7; ++p)
        if (rng() % 3 == 0) l.push_back(p);
      if (l.size() < 3) continue;
      bool ok = true;
      for (std::size_t i = 0; i < l.size() && ok; ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
          if (used[l[i]][l[j]]) ok = false;
      if (!ok) continue;
      for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) used[l[i]][l[j]] = 1;
      lines.push_back(l);
    }
    pool.emplace_back(7, lines);
  }
  for (std::size_t i = 0; i < pool.size(); i += 3)
    for (std::size_t j = i + 1; j < pool.size(); j += 7) {
      bool brute = oracle::brute_isomorphism(pool[i], pool[j]).has_value();
      EXPECT_EQ(canonical_form(pool[i]) == canonical_form(pool[j]), brute);
      auto iso = are_isomorphic(pool[i], pool[j]);
      EXPECT_EQ(iso.has_value(), brute);
      if (iso) EXPECT_EQ(pool[i].permuted(*iso), pool[j]);
    }
}

TEST(AreIsomorphic, FanoRelabelled) {
  std::mt19937 rng(1);
  auto g = oracle::fano();
  auto h = g.permuted(random_perm(7, rng));
  auto iso = are_isomorphic(g, h);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(g.permuted(*iso), h);
}

TEST(AreIsomorphic, DifferentSizes) {
  EXPECT_FALSE(are_isomorphic(pg_as_geometry(2, field_make(3, 1)).geometry, ag_as_geometry(2, field_make(2, 2)).geometry));
}

TEST(AreIsomorphic, ColoursMustMatch) {
  auto g = Geometry(3, {{0, 1, 2}});
  Coloring a{Colour::RedOnly, Colour::BlueOnly, Colour::BlueOnly};
  Coloring b{Colour::BlueOnly, Colour::RedOnly, Colour::BlueOnly};
  Coloring c{Colour::RedOnly, Colour::RedOnly, Colour::BlueOnly};
  auto iso = are_isomorphic(g, &a, g, &b);
  ASSERT_TRUE(iso);
  EXPECT_EQ(permuted(a, *iso), b);
  EXPECT_FALSE(are_isomorphic(g, &a, g, &c));
  EXPECT_EQ(canonical_form_up_to_swap(g, a), canonical_form_up_to_swap(g, swapped(c)));
}

TEST(Automorphisms, MatchBruteForce) {
  EXPECT_EQ(automorphism_group_order(oracle::fano()), 168);
  EXPECT_EQ(oracle::brute_automorphisms(oracle::fano()), 168);
  auto ag = ag_as_geometry(2, field_make(3, 1)).geometry;
  EXPECT_EQ(automorphism_group_order(ag), 432);
  EXPECT_EQ(oracle::brute_automorphisms(ag), 432);
  EXPECT_EQ(automorphism_group_order(Geometry(4, {{0, 1, 2, 3}})), 24);
  EXPECT_EQ(automorphism_group_order(Geometry(6, {{0, 1, 2}, {0, 3, 4}})), oracle::brute_automorphisms(Geometry(6, {{0, 1, 2}, {0, 3, 4}})));
}

TEST(Automorphisms, LargerSpaces) {
  EXPECT_EQ(automorphism_group_order(pg_as_geometry(3, field_make(2, 1)).geometry), 20160);
  EXPECT_EQ(automorphism_group_order(pg_as_geometry(2, field_make(3, 1)).geometry), 5616);
  // AGammaL(2,4) = 16 * |GL(2,4)| * 2 = 16 * 180 * 2
  EXPECT_EQ(automorphism_group_order(ag_as_geometry(2, field_make(2, 2)).geometry), 5760);
  BigCount fact = 1;
  for (int i = 2; i <= 40; ++i) fact *= i;
  EXPECT_EQ(automorphism_group_order(Geometry(40, {})), fact);
  EXPECT_THROW(automorphism_group_order(Geometry(65, {})), UnsupportedSize);
}

TEST(Automorphisms, ColouredMatchBruteForce) {
  std::mt19937 rng(3);
  auto g = ag_as_geometry(2, field_make(3, 1)).geometry;
  for (int t = 0; t < 10; ++t) {
    Coloring c(9);
    for (auto& x : c) x = Colour(1 + rng() % 3);
    EXPECT_EQ(automorphism_group_order(g, &c), oracle::brute_automorphisms(g, &c));
  }
}

TEST(Hex, Lowercase) { EXPECT_EQ(to_hex(std::string("\x01\xab", 2)), "01ab"); }
