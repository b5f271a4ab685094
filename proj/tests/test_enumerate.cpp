#include <gtest/gtest.h>

#include <set>

#include "sylgal/chromatic.hpp"
#include "sylgal/constructions.hpp"
#include "sylgal/enumerate.hpp"

using namespace sylgal;

namespace {

EnumSpec sg(int n, int k = 3) {
  EnumSpec s;
  s.n_points = n;
  s.min_line_size = k;
  return s;
}

EnumSpec coloured(int n, ColourFilter f) {
  EnumSpec s;
  s.n_points = n;
  s.min_line_size = 2;
  s.colour_filter = f;
  return s;
}

std::set<CanonicalForm> forms_of(const std::vector<Geometry>& gs) {
  std::set<CanonicalForm> out;
  for (const auto& g : gs) out.insert(canonical_form(g));
  return out;
}

std::set<CanonicalForm> forms_of(const Enumeration& e) {
  std::set<CanonicalForm> out;
  for (const auto& item : e.items) out.insert(canonical_form(item.geometry));
  return out;
}

}  // namespace

TEST(Enumerate, SgCountsUpToTwelve) {
  const std::vector<std::size_t> expected{0, 1, 0, 1, 1, 1, 3};
  for (int n = 6; n <= 12; ++n) EXPECT_EQ(enumerate(sg(n)).items.size(), expected[n - 6]) << n;
  for (int n = 3; n <= 5; ++n) EXPECT_TRUE(enumerate(sg(n)).items.empty()) << n;
}

TEST(Enumerate, SevenPointsIsFano) {
  auto e = enumerate(sg(7));
  ASSERT_EQ(e.items.size(), 1u);
  EXPECT_EQ(e.items[0].form, canonical_form(projective_space_config(2, 2).geometry));
}

TEST(Enumerate, FourSgThirteenIsProjectivePlane) {
  auto e = enumerate(sg(13, 4));
  ASSERT_EQ(e.items.size(), 1u);
  EXPECT_EQ(e.items[0].form, canonical_form(projective_space_config(2, 3).geometry));
  EXPECT_TRUE(enumerate(sg(12, 4)).items.empty());
}

TEST(Enumerate, OutputsSatisfyTheirSpec) {
  for (auto spec : {sg(12), sg(13), sg(13, 4), sg(8, 2)}) {
    auto e = enumerate(spec);
    for (const auto& item : e.items) {
      const auto& g = item.geometry;
      EXPECT_TRUE(g.valid());
      EXPECT_EQ(g.n_points(), spec.n_points);
      EXPECT_FALSE(g.is_collinear());
      EXPECT_TRUE(is_k_sg(g, spec.min_line_size));
      EXPECT_EQ(item.form, canonical_form(g));
    }
  }
}

TEST(Enumerate, CollinearAllowedWhenAsked) {
  auto spec = sg(5);
  spec.require_non_collinear = false;
  auto e = enumerate(spec);
  ASSERT_EQ(e.items.size(), 1u);
  EXPECT_TRUE(e.items[0].geometry.is_collinear());
}

TEST(Enumerate, MatchesReferenceUpToNinePoints) {
  for (int k : {3, 4})
    for (int n = 3; n <= 9; ++n) EXPECT_EQ(forms_of(enumerate(sg(n, k))), forms_of(brute_enumerate(n, k))) << n << " " << k;
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(forms_of(enumerate(sg(n, 2))), forms_of(brute_enumerate(n, 2))) << n;
}

TEST(Enumerate, ReferenceCounts) {
  EXPECT_EQ(brute_enumerate(7, 3).size(), 1u);
  EXPECT_EQ(brute_enumerate(9, 3).size(), 1u);
  EXPECT_EQ(brute_enumerate(6, 3).size(), 0u);
  // non-collinear linear spaces: 2 on 4 points, 4 on 5, 9 on 6
  EXPECT_EQ(brute_enumerate(4, 2).size(), 2u);
  EXPECT_EQ(brute_enumerate(5, 2).size(), 4u);
  EXPECT_EQ(brute_enumerate(6, 2).size(), 9u);
  EXPECT_THROW(brute_enumerate(10, 3), UnsupportedSize);
}

TEST(Enumerate, ChromaticUpToTenGivesThreeGeometries) {
  std::set<CanonicalForm> underlying;
  for (int n = 3; n <= 10; ++n) {
    auto e = enumerate(coloured(n, ColourFilter::Chromatic));
    for (const auto& item : e.items) {
      ASSERT_TRUE(item.coloring);
      EXPECT_TRUE(is_chromatic(item.geometry, *item.coloring));
      EXPECT_FALSE(item.geometry.is_collinear());
    }
    for (const auto& g : underlying_geometries(e)) underlying.insert(g.form);
  }
  std::set<CanonicalForm> expected{canonical_form(projective_space_config(2, 2).geometry),
                                   canonical_form(affine_space_config(2, 3).geometry), canonical_form(ag_plus(3).geometry)};
  EXPECT_EQ(underlying, expected);
}

TEST(Enumerate, ChromaticMatchesColouringSearch) {
  // every chromatic colouring of each underlying geometry appears, and nothing else
  for (int n : {7, 9, 10}) {
    auto e = enumerate(coloured(n, ColourFilter::Chromatic));
    std::set<CanonicalForm> got, want;
    for (const auto& item : e.items) got.insert(item.form);
    for (const auto& g : underlying_geometries(e))
      for (const auto& c : chromatic_colorings(g.geometry)) want.insert(canonical_form(g.geometry, c));
    EXPECT_EQ(got, want) << n;
  }
}

TEST(Enumerate, AffinePlusColourings) {
  auto e = enumerate(coloured(10, ColourFilter::Chromatic));
  EXPECT_EQ(e.items.size(), 3u);
  EXPECT_EQ(count_up_to_swap(e), 2u);
  for (const auto& item : e.items) {
    int bicoloured = 0;
    for (Colour c : *item.coloring) bicoloured += c == Colour::Bicoloured;
    EXPECT_GE(bicoloured, 9);
  }
}

TEST(Enumerate, MrCounts) {
  for (int n = 6; n <= 11; ++n) EXPECT_TRUE(enumerate(coloured(n, ColourFilter::Mr)).items.empty()) << n;
  auto twelve = enumerate(coloured(12, ColourFilter::Mr));
  EXPECT_EQ(count_up_to_swap(twelve), 1u);
  auto thirteen = enumerate(coloured(13, ColourFilter::Mr));
  EXPECT_EQ(count_up_to_swap(thirteen), 1u);
  EXPECT_EQ(thirteen.items.size(), 2u);
  for (const auto* e : {&twelve, &thirteen})
    for (const auto& item : e->items) {
      EXPECT_TRUE(is_mr(item.geometry, *item.coloring));
      EXPECT_TRUE(is_chromatic(item.geometry, *item.coloring));
    }
}

TEST(Enumerate, MrAgreesWithTwoColouringSearch) {
  // the underlying geometries of a smaller MR search all admit a 2-colouring
  auto e = enumerate(coloured(12, ColourFilter::Mr));
  for (const auto& g : underlying_geometries(e)) EXPECT_TRUE(mr_colorable(g.geometry));
}

TEST(Enumerate, IndependentOfWorkersAndSplitting) {
  EnumOptions one, many, shallow, deep;
  one.workers = 1;
  many.workers = 4;
  shallow.levels = 2;
  deep.levels = 6;
  for (auto spec : {sg(12), sg(13), coloured(13, ColourFilter::Mr)}) {
    auto a = enumerate(spec, one), b = enumerate(spec, many), c = enumerate(spec, shallow), d = enumerate(spec, deep);
    ASSERT_EQ(a.items.size(), b.items.size());
    for (std::size_t i = 0; i < a.items.size(); ++i) {
      EXPECT_EQ(a.items[i].form, b.items[i].form);
      EXPECT_EQ(a.items[i].geometry, b.items[i].geometry);
      EXPECT_EQ(a.items[i].coloring, b.items[i].coloring);
      EXPECT_EQ(a.items[i].form, c.items[i].form);
      EXPECT_EQ(a.items[i].form, d.items[i].form);
    }
  }
}

TEST(Enumerate, BudgetRaisesPartialResult) {
  EnumOptions o;
  o.budget_seconds = 0.05;
  EXPECT_THROW(enumerate(sg(15), o), PartialResult);
}

TEST(Enumerate, RejectsBadSpecs) {
  EXPECT_THROW(enumerate(sg(2)), InvalidArguments);
  EXPECT_THROW(enumerate(sg(8, 1)), InvalidArguments);
  EXPECT_THROW(enumerate(sg(65)), UnsupportedSize);
  EXPECT_THROW(parse_filter("blue"), InvalidArguments);
}
