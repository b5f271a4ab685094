#pragma once

// Text formats. A geometry document holds a `points N` header, `line ...`
// rows, optional `color i R|B|RB` rows and an optional coordinate table
// (`field p k modulus=...` then `coord i a0 ... an`). `#` starts a comment.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sylgal/coloring.hpp"
#include "sylgal/error.hpp"
#include "sylgal/galois.hpp"
#include "sylgal/geometry.hpp"

namespace sylgal {

struct GeometryDocument {
  Geometry geometry;
  std::optional<Coloring> coloring;
  std::optional<std::vector<ProjPoint>> coords;

  bool operator==(const GeometryDocument&) const = default;
};

inline void write_geometry(std::ostream& out, const Geometry& g) {
  out << "points " << g.n_points() << '\n';
  for (const auto& l : g.lines()) {
    out << "line";
    for (Point p : l) out << ' ' << p;
    out << '\n';
  }
}

inline void write_coloring(std::ostream& out, const Coloring& c) {
  for (std::size_t i = 0; i < c.size(); ++i) out << "color " << i << ' ' << colour_name(c[i]) << '\n';
}

inline void write_coordinates(std::ostream& out, const std::vector<ProjPoint>& pts) {
  if (pts.empty()) return;
  const FiniteField& f = pts.front().field;
  out << f.describe() << '\n';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << "coord " << i;
    for (auto e : pts[i].coords) out << ' ' << f.format(e);
    out << '\n';
  }
}

inline void write_document(std::ostream& out, const GeometryDocument& d) {
  write_geometry(out, d.geometry);
  if (d.coloring) write_coloring(out, *d.coloring);
  if (d.coords) write_coordinates(out, *d.coords);
}

inline std::string to_text(const GeometryDocument& d) {
  std::ostringstream out;
  write_document(out, d);
  return out.str();
}

namespace detail {

inline long parse_count(const std::string& s, int line_no) {
  std::size_t used = 0;
  long v = -1;
  try {
    v = std::stol(s, &used);
  } catch (...) {
    used = 0;
  }
  if (used != s.size() || v < 0) throw ParseError(line_no, "expected a non-negative integer, got '" + s + "'");
  return v;
}

}  // namespace detail

inline GeometryDocument read_document(std::istream& in) {
  GeometryDocument d;
  long n = -1;
  std::vector<Line> lines;
  std::vector<std::optional<Colour>> colours;
  std::optional<FiniteField> field;
  std::vector<std::optional<ProjPoint>> coords;
  std::string raw;
  int line_no = 0;
  auto index = [&](const std::string& s) {
    long i = detail::parse_count(s, line_no);
    if (n < 0) throw ParseError(line_no, "the 'points N' header must come first");
    if (i >= n) throw ParseError(line_no, "point index " + s + " out of range");
    return int(i);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> w;
    for (std::string t; ls >> t;) w.push_back(t);
    if (w.empty()) continue;
    const std::string& key = w[0];
    if (key == "points") {
      if (n >= 0) throw ParseError(line_no, "duplicate 'points' header");
      if (w.size() != 2) throw ParseError(line_no, "expected 'points N'");
      n = detail::parse_count(w[1], line_no);
      colours.assign(std::size_t(n), std::nullopt);
      coords.assign(std::size_t(n), std::nullopt);
    } else if (key == "line") {
      Line l;
      for (std::size_t i = 1; i < w.size(); ++i) l.push_back(index(w[i]));
      for (std::size_t i = 1; i < l.size(); ++i)
        if (l[i] <= l[i - 1]) throw ParseError(line_no, "line indices must be strictly increasing");
      if (l.size() < 3) throw ParseError(line_no, "stored lines need at least 3 points");
      lines.push_back(std::move(l));
    } else if (key == "color" || key == "colour") {
      if (w.size() != 3) throw ParseError(line_no, "expected 'color i R|B|RB'");
      int i = index(w[1]);
      if (colours[i]) throw ParseError(line_no, "point " + w[1] + " coloured twice");
      try {
        colours[i] = parse_colour(w[2]);
      } catch (const InvalidArguments& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (key == "field") {
      if (w.size() != 4 || w[3].rfind("modulus=", 0) != 0) throw ParseError(line_no, "expected 'field p k modulus=...'");
      try {
        field = field_make(int(detail::parse_count(w[1], line_no)), int(detail::parse_count(w[2], line_no)));
      } catch (const InvalidArguments& e) {
        throw ParseError(line_no, e.what());
      }
      if (field->describe() != w[0] + " " + w[1] + " " + w[2] + " " + w[3])
        throw ParseError(line_no, "only the default modulus is supported: " + field->describe());
    } else if (key == "coord") {
      if (!field) throw ParseError(line_no, "'coord' before 'field'");
      if (w.size() < 4) throw ParseError(line_no, "expected 'coord i a0 a1 ...'");
      int i = index(w[1]);
      if (coords[i]) throw ParseError(line_no, "point " + w[1] + " has two coordinate rows");
      std::vector<FieldElem> c;
      try {
        for (std::size_t k = 2; k < w.size(); ++k) c.push_back(field->parse(w[k]));
        coords[i] = ProjPoint(*field, c);
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
    } else {
      throw ParseError(line_no, "unknown keyword '" + key + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing 'points N' header");
  d.geometry = Geometry(int(n), std::move(lines));
  if (auto why = d.geometry.violation()) throw ParseError(line_no, *why);

  auto count = [](const auto& v) {
    std::size_t k = 0;
    for (const auto& x : v) k += x.has_value();
    return k;
  };
  if (std::size_t k = count(colours); k > 0) {
    if (k != colours.size()) throw ParseError(line_no, "colouring covers " + std::to_string(k) + " of " + std::to_string(n) + " points");
    Coloring c;
    for (auto& x : colours) c.push_back(*x);
    d.coloring = std::move(c);
  }
  if (std::size_t k = count(coords); k > 0) {
    if (k != coords.size()) throw ParseError(line_no, "coordinates cover " + std::to_string(k) + " of " + std::to_string(n) + " points");
    std::vector<ProjPoint> pts;
    for (auto& x : coords) {
      if (x->dim() != coords.front()->dim()) throw ParseError(line_no, "coordinate rows differ in length");
      pts.push_back(*x);
    }
    d.coords = std::move(pts);
  }
  return d;
}

inline GeometryDocument document_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_document(in);
}

}  // namespace sylgal
