#pragma once

// Chromatic and MR colourings: verification, exhaustive colouring search and
// the structural checks that every chromatic geometry must pass.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sylgal/canon.hpp"
#include "sylgal/coloring.hpp"
#include "sylgal/error.hpp"
#include "sylgal/geometry.hpp"

namespace sylgal {

struct ChromaticVerdict {
  bool chromatic = true;
  std::optional<std::pair<Point, Point>> witness;  // least offending pair
  Colour shared = Colour::Bicoloured;               // RedOnly or BlueOnly: the colour the pair shares

  explicit operator bool() const { return chromatic; }
};

struct ColorCensus {
  int b = 0;   // blue-only
  int r = 0;   // red-only
  int p = 0;   // bicoloured
  long t = 0;  // 2-lines
};

inline void require_covering(const Geometry& g, const Coloring& c) {
  if (int(c.size()) != g.n_points()) throw InvalidArguments("colouring does not cover the geometry");
}

inline ColorCensus census(const Geometry& g, const Coloring& c) {
  require_covering(g, c);
  ColorCensus out;
  for (Colour x : c) {
    if (x == Colour::BlueOnly) ++out.b;
    else if (x == Colour::RedOnly) ++out.r;
    else ++out.p;
  }
  out.t = g.two_line_count();
  return out;
}

inline int red_count(const Coloring& c) {
  return int(std::count_if(c.begin(), c.end(), [](Colour x) { return has_red(x); }));
}
inline int blue_count(const Coloring& c) {
  return int(std::count_if(c.begin(), c.end(), [](Colour x) { return has_blue(x); }));
}

// For every pair sharing a colour, the line through it must carry a third
// point of the other colour.
inline ChromaticVerdict is_chromatic(const Geometry& g, const Coloring& c) {
  require_valid(g);
  require_covering(g, c);
  const int n = g.n_points();
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b) {
      const auto common = std::uint8_t(c[a]) & std::uint8_t(c[b]);
      if (!common) continue;
      int li = g.line_index(a, b);
      for (std::uint8_t bit : {std::uint8_t(1), std::uint8_t(2)}) {
        if (!(common & bit)) continue;
        const std::uint8_t other = bit ^ 3;
        bool found = false;
        if (li >= 0)
          for (Point x : g.lines()[li])
            if (x != a && x != b && (std::uint8_t(c[x]) & other)) {
              found = true;
              break;
            }
        if (!found) return {false, std::make_pair(a, b), Colour(bit)};
      }
    }
  return {};
}

// Every line, implicit 2-lines included, meets both colours.
inline bool is_mr(const Geometry& g, const Coloring& c) {
  require_valid(g);
  require_covering(g, c);
  for (Colour x : c)
    if (x == Colour::Bicoloured) throw InvalidArguments("MR colourings have no bicoloured points");
  for (const auto& l : g.lines()) {
    bool red = false, blue = false;
    for (Point p : l) {
      red |= c[p] == Colour::RedOnly;
      blue |= c[p] == Colour::BlueOnly;
    }
    if (!red || !blue) return false;
  }
  const int n = g.n_points();
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      if (g.line_index(a, b) < 0 && c[a] == c[b]) return false;
  return true;
}

namespace detail {

inline std::vector<Point> degree_order(const Geometry& g) {
  std::vector<Point> order(g.n_points());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Point a, Point b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Partial-assignment test around point p: 0 means unassigned.
inline bool chromatic_consistent_at(const Geometry& g, const std::vector<std::uint8_t>& col, Point p) {
  const int n = g.n_points();
  for (Point q = 0; q < n; ++q)
    if (q != p && col[q] && g.line_index(p, q) < 0 && (col[p] & col[q])) return false;
  for (int li : g.lines_through(p)) {
    const auto& l = g.lines()[li];
    for (std::uint8_t bit : {std::uint8_t(1), std::uint8_t(2)}) {
      const std::uint8_t other = bit ^ 3;
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (!(col[l[i]] & bit)) continue;
        for (std::size_t j = i + 1; j < l.size(); ++j) {
          if (!(col[l[j]] & bit)) continue;
          bool possible = false;
          for (std::size_t k = 0; k < l.size() && !possible; ++k)
            if (k != i && k != j && (col[l[k]] == 0 || (col[l[k]] & other))) possible = true;
          if (!possible) return false;
        }
      }
    }
  }
  return true;
}

inline bool mr_consistent_at(const Geometry& g, const std::vector<std::uint8_t>& col, Point p) {
  const int n = g.n_points();
  for (Point q = 0; q < n; ++q)
    if (q != p && col[q] && g.line_index(p, q) < 0 && col[p] == col[q]) return false;
  for (int li : g.lines_through(p)) {
    bool open = false, red = false, blue = false;
    for (Point x : g.lines()[li]) {
      open |= col[x] == 0;
      red |= col[x] == 1;
      blue |= col[x] == 2;
    }
    if (!open && !(red && blue)) return false;
  }
  return true;
}

}  // namespace detail

// Every chromatic colouring of g, one per class under colour-preserving
// automorphisms, sorted by canonical form.
inline std::vector<Coloring> chromatic_colorings(const Geometry& g, int limit = 16) {
  require_valid(g);
  if (g.n_points() > limit) throw UnsupportedSize("colouring search limited to " + std::to_string(limit) + " points");
  const auto order = detail::degree_order(g);
  const int n = g.n_points();
  std::vector<std::uint8_t> col(n, 0);
  std::set<CanonicalForm> seen;
  std::vector<std::pair<CanonicalForm, Coloring>> found;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      Coloring c(n);
      for (int i = 0; i < n; ++i) c[i] = Colour(col[i]);
      auto form = canonical_form(g, c);
      if (seen.insert(form).second) found.emplace_back(std::move(form), std::move(c));
      return;
    }
    Point p = order[depth];
    for (std::uint8_t v : {std::uint8_t(3), std::uint8_t(1), std::uint8_t(2)}) {
      col[p] = v;
      if (detail::chromatic_consistent_at(g, col, p)) self(self, depth + 1);
    }
    col[p] = 0;
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end());
  std::vector<Coloring> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

// A proper red/blue colouring (every line meets both colours), if any.
inline std::optional<Coloring> mr_colorable(const Geometry& g) {
  require_valid(g);
  const int n = g.n_points();
  const auto order = detail::degree_order(g);
  std::vector<std::uint8_t> col(n, 0);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    Point p = order[depth];
    for (std::uint8_t v : {std::uint8_t(1), std::uint8_t(2)}) {
      if (depth == 0 && v == 2) break;  // red/blue swap symmetry
      col[p] = v;
      if (detail::mr_consistent_at(g, col, p) && self(self, depth + 1)) return true;
    }
    col[p] = 0;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  Coloring c(n);
  for (int i = 0; i < n; ++i) c[i] = Colour(col[i]);
  return c;
}

// Residue point colour = union of the colours on its fibre.
inline Coloring inherited_coloring(const ContractionResult& cr, const Coloring& c) {
  Coloring out;
  out.reserve(cr.fibers.size());
  for (const auto& fiber : cr.fibers) {
    std::uint8_t v = 0;
    for (Point p : fiber) {
      if (p < 0 || p >= int(c.size())) throw InvalidArguments("colouring does not cover the contracted geometry");
      v |= std::uint8_t(c[p]);
    }
    if (!v) throw InvalidArguments("empty fibre in contraction");
    out.push_back(Colour(v));
  }
  return out;
}

struct PropertyCheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string witness;  // set on failure
};

struct StructureReport {
  std::vector<PropertyCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
  }
  const PropertyCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

// All lines of g including implicit 2-lines, as sorted point lists.
inline std::vector<PointList> all_lines(const Geometry& g) {
  std::vector<PointList> out(g.lines().begin(), g.lines().end());
  for (Point a = 0; a < g.n_points(); ++a)
    for (Point b = a + 1; b < g.n_points(); ++b)
      if (g.line_index(a, b) < 0) out.push_back({a, b});
  return out;
}

inline std::string show(const PointList& l) {
  std::string s = "{";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + "}";
}

// Projective plane order m if g is one (m >= 2), else 0.
inline int projective_plane_order(const Geometry& g) {
  const int n = g.n_points();
  if (g.two_line_count() != 0 || g.n_lines() == 0) return 0;
  const int m = int(g.lines()[0].size()) - 1;
  if (m < 2 || n != m * m + m + 1) return 0;
  for (const auto& l : g.lines())
    if (int(l.size()) != m + 1) return 0;
  for (Point p = 0; p < n; ++p)
    if (g.degree(p) != m + 1) return 0;
  return m;
}

}  // namespace detail

// Structural properties every chromatic geometry has; failures carry a
// concrete witness.
inline StructureReport check_structure_props(const Geometry& g, const Coloring& c) {
  if (!is_chromatic(g, c)) throw InvalidArguments("structure checks need a chromatic colouring");
  const int n = g.n_points();
  const bool non_collinear = !g.is_collinear();
  StructureReport rep;

  {  // lines through a bicoloured point have at least 3 points
    PropertyCheck chk{"bicoloured-lines", true, true, ""};
    for (Point a = 0; a < n && chk.passed; ++a) {
      if (c[a] != Colour::Bicoloured) continue;
      for (Point b = 0; b < n; ++b)
        if (b != a && g.line_index(a, b) < 0) {
          chk.passed = false;
          chk.witness = "2-line " + detail::show({std::min(a, b), std::max(a, b)}) + " through bicoloured point " + std::to_string(a);
          break;
        }
    }
    rep.checks.push_back(chk);
  }

  auto lines = detail::all_lines(g);

  {  // at least 6 of each colour; at least 3 of each off any line
    PropertyCheck chk{"six-per-colour", non_collinear, true, ""};
    if (non_collinear) {
      int red = red_count(c), blue = blue_count(c);
      if (red < 6 || blue < 6) {
        chk.passed = false;
        chk.witness = "red " + std::to_string(red) + ", blue " + std::to_string(blue);
      }
      for (const auto& l : lines) {
        if (!chk.passed) break;
        std::vector<char> on(n, 0);
        for (Point p : l) on[p] = 1;
        int r = 0, b = 0;
        for (Point p = 0; p < n; ++p)
          if (!on[p]) {
            r += has_red(c[p]);
            b += has_blue(c[p]);
          }
        if (r < 3 || b < 3) {
          chk.passed = false;
          chk.witness = "line " + detail::show(l) + " has " + std::to_string(r) + " red and " + std::to_string(b) + " blue points off it";
        }
      }
    }
    rep.checks.push_back(chk);
  }

  {  // covered by three lines: concurrent or pairwise disjoint, SG, bicoloured off the common point
    PropertyCheck chk{"three-lines", false, true, ""};
    if (non_collinear) {
      std::vector<std::vector<int>> through(n);
      for (int i = 0; i < int(lines.size()); ++i)
        for (Point p : lines[i]) through[p].push_back(i);
      std::vector<char> cov(n);
      for (int i : through[0]) {
        std::fill(cov.begin(), cov.end(), 0);
        for (Point p : lines[i]) cov[p] = 1;
        Point first2 = Point(std::find(cov.begin(), cov.end(), 0) - cov.begin());
        if (first2 >= n) continue;
        for (int j : through[first2]) {
          auto cov2 = cov;
          for (Point p : lines[j]) cov2[p] = 1;
          Point first3 = Point(std::find(cov2.begin(), cov2.end(), 0) - cov2.begin());
          if (first3 >= n) continue;  // two lines cover: impossible for chromatic geometries, reported below
          for (int k : through[first3]) {
            auto cov3 = cov2;
            for (Point p : lines[k]) cov3[p] = 1;
            if (std::find(cov3.begin(), cov3.end(), 0) != cov3.end()) continue;
            chk.applicable = true;
            std::vector<int> mult(n, 0);
            for (int li : {i, j, k})
              for (Point p : lines[li]) ++mult[p];
            Point common = -1;
            bool concurrent = false, disjoint = true;
            for (Point p = 0; p < n; ++p) {
              if (mult[p] == 3) {
                concurrent = true;
                common = p;
              }
              if (mult[p] >= 2) disjoint = false;
            }
            std::string cover = detail::show(lines[i]) + " " + detail::show(lines[j]) + " " + detail::show(lines[k]);
            if (!concurrent && !disjoint) {
              chk.passed = false;
              chk.witness = "lines " + cover + " neither concurrent nor disjoint";
            } else if (!is_k_sg(g, 3)) {
              chk.passed = false;
              chk.witness = "covered by " + cover + " but has a 2-line";
            } else {
              for (Point p = 0; p < n; ++p)
                if (p != common && c[p] != Colour::Bicoloured) {
                  chk.passed = false;
                  chk.witness = "covered by " + cover + " but point " + std::to_string(p) + " is not bicoloured";
                  break;
                }
            }
            if (!chk.passed) break;
          }
          if (!chk.passed) break;
        }
        if (!chk.passed) break;
      }
    }
    rep.checks.push_back(chk);
  }

  {  // no two lines cover a non-collinear chromatic geometry
    PropertyCheck chk{"two-lines", non_collinear, true, ""};
    if (non_collinear)
      for (std::size_t i = 0; i < lines.size() && chk.passed; ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
          std::vector<char> cov(n, 0);
          for (Point p : lines[i]) cov[p] = 1;
          for (Point p : lines[j]) cov[p] = 1;
          if (std::find(cov.begin(), cov.end(), 0) == cov.end()) {
            chk.passed = false;
            chk.witness = "covered by " + detail::show(lines[i]) + " " + detail::show(lines[j]);
            break;
          }
        }
    rep.checks.push_back(chk);
  }

  {  // lines of size <= 3: Steiner triple system, all bicoloured
    PropertyCheck chk{"steiner", non_collinear && g.max_line_size() <= 3, true, ""};
    if (chk.applicable) {
      if (g.two_line_count() > 0) {
        chk.passed = false;
        chk.witness = "has " + std::to_string(g.two_line_count()) + " 2-lines";
      } else {
        for (Point p = 0; p < n; ++p)
          if (c[p] != Colour::Bicoloured) {
            chk.passed = false;
            chk.witness = "point " + std::to_string(p) + " is not bicoloured";
            break;
          }
      }
    }
    rep.checks.push_back(chk);
  }

  {  // projective plane of order m: each colour class has >= m + sqrt(m) + 1 points
    const int m = detail::projective_plane_order(g);
    PropertyCheck chk{"projective-plane-bound", m > 0, true, ""};
    if (m > 0) {
      const double bound = m + std::sqrt(double(m)) + 1;
      int red = red_count(c), blue = blue_count(c);
      if (red < bound || blue < bound) {
        chk.passed = false;
        chk.witness = "order " + std::to_string(m) + ": red " + std::to_string(red) + ", blue " + std::to_string(blue);
      }
    }
    rep.checks.push_back(chk);
  }
  return rep;
}

}  // namespace sylgal
