#include <gtest/gtest.h>

#include <sstream>

#include "sylgal/sylgal.hpp"

using namespace sylgal;

TEST(Io, GeometryRoundTrip) {
  std::vector<NamedConfig> configs{projective_space_config(2, 2), affine_space_config(2, 3), ag_plus(3),
                                   projective_space_config(2, 4), van_wamelen_11(field_make(3, 2)),
                                   parallel_lines_config(5, 4), table4_deletion("20.1")};
  for (const auto& c : configs) {
    GeometryDocument d{c.geometry, c.coloring, c.coords};
    auto text = to_text(d);
    auto back = document_from_text(text);
    EXPECT_EQ(back, d) << c.name;
    EXPECT_EQ(to_text(back), text) << c.name;
  }
}

TEST(Io, EnumeratedRoundTrip) {
  EnumSpec s;
  s.n_points = 12;
  s.min_line_size = 2;
  s.colour_filter = ColourFilter::Mr;
  for (const auto& item : enumerate(s).items) {
    GeometryDocument d{item.geometry, item.coloring, {}};
    EXPECT_EQ(document_from_text(to_text(d)), d);
  }
}

TEST(Io, ExactText) {
  auto d = document_from_text("# Fano\npoints 7\nline 0 1 2\nline 0 3 4\nline 0 5 6\nline 1 3 5\nline 1 4 6\n"
                              "line 2 3 6\nline 2 4 5  # last\n");
  EXPECT_EQ(d.geometry, Geometry(7, {{2, 4, 5}, {0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}}));
  EXPECT_TRUE(d.geometry.valid());
  EXPECT_FALSE(d.coloring);
  std::ostringstream out;
  write_geometry(out, d.geometry);
  EXPECT_EQ(out.str(), "points 7\nline 0 1 2\nline 0 3 4\nline 0 5 6\nline 1 3 5\nline 1 4 6\nline 2 3 6\nline 2 4 5\n");
  auto f4 = field_make(2, 2);
  std::ostringstream coords;
  write_coordinates(coords, {ProjPoint(f4, {f4.one(), f4.primitive(), f4.zero()})});
  EXPECT_EQ(coords.str(), f4.describe() + "\ncoord 0 1,0 0,1 0,0\n");
}

TEST(Io, Errors) {
  for (const char* bad : {"line 0 1 2\n", "points 3\nline 0 1\n", "points 3\nline 0 2 1\n", "points 3\nline 0 1 3\n",
                          "points 4\nline 0 1 2\nline 0 1 3\n", "points 3\ncolor 0 R\n", "points 3\nfrob 1\n",
                          "points 3\npoints 3\n", "points 2\ncoord 0 1 0\n", "points x\n",
                          "points 1\nfield 2 2 modulus=1,0,1\ncoord 0 1,0 0,0 0,0\n"}) {
    EXPECT_THROW(document_from_text(bad), ParseError) << bad;
  }
}

TEST(Report, SgAndMrTables) {
  ReportOptions o;
  auto sg = emit_report("table1-sg", o);
  ASSERT_EQ(sg.rows.size(), 7u);
  const std::vector<std::string> expected{"0", "1", "0", "1", "1", "1", "3"};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(sg.rows[i].value, expected[i]);
    EXPECT_EQ(sg.rows[i].provenance, "computed-exhaustive");
  }
  o.max_points = 12;
  auto mr = emit_report("table1-mr", o);
  EXPECT_EQ(mr.rows.back().key, "n=12 swap-distinct");
  EXPECT_EQ(mr.rows.back().value, "1");
}

TEST(Report, BudgetFallsBackToCitedValues) {
  ReportOptions o;
  o.max_points = 15;
  o.budget_seconds = 0.01;
  auto sg = emit_report("table1-sg", o);
  EXPECT_EQ(sg.rows.back().key, "n=15");
  EXPECT_EQ(sg.rows.back().value, "119");
  EXPECT_EQ(sg.rows.back().provenance, "cited-paper");
  for (const auto& row : sg.rows) EXPECT_TRUE(row.provenance == "computed-exhaustive" || row.provenance == "cited-paper");
}

TEST(Report, EmbeddabilityTable) {
  auto t = emit_report("table2");
  ASSERT_FALSE(t.rows.empty());
  EXPECT_EQ(t.rows[0].value, "3");
  EXPECT_EQ(t.rows[0].note, "PG(2,2),AG(2,3),AG(2,3)+");
  for (const auto& row : t.rows)
    if (row.key == "AG(2,3) q=5") {
      EXPECT_EQ(row.value, "no");
      EXPECT_EQ(row.provenance, "computed-exhaustive");
    }
  EXPECT_EQ(t.rows.size(), 1u + 3 * 8);
}

TEST(Report, FourSgTable) {
  auto t = emit_report("table4-partial");
  ASSERT_EQ(t.rows.size(), 5u);
  EXPECT_EQ(t.rows[0].value, "PG(2,3)");
  EXPECT_EQ(t.rows[1].value, "none");
  EXPECT_EQ(t.rows[2].value, "none");
  EXPECT_EQ(t.rows[3].value, "AG(2,4)");
  EXPECT_EQ(t.rows[4].value, "AG(2,4)+");
}

TEST(Report, DeterministicText) {
  ReportOptions one, many;
  one.workers = 1;
  many.workers = 3;
  std::ostringstream a, b;
  write_report_tsv(a, emit_report("table4-partial", one));
  write_report_tsv(b, emit_report("table4-partial", many));
  EXPECT_EQ(a.str(), b.str());
  std::ostringstream pretty;
  write_report_pretty(pretty, emit_report("table2"));
  EXPECT_NE(pretty.str().find("computed-witness"), std::string::npos);
  EXPECT_THROW(emit_report("table9"), InvalidArguments);
}
