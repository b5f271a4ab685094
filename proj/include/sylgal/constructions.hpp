#pragma once

// Named configurations: a geometry together with the coordinates it was
// read off from and, where one is natural, a chromatic colouring.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sylgal/coloring.hpp"
#include "sylgal/error.hpp"
#include "sylgal/galois.hpp"
#include "sylgal/geometry.hpp"

namespace sylgal {

struct NamedConfig {
  std::string name;
  Geometry geometry;
  std::vector<ProjPoint> coords;
  std::optional<Coloring> coloring;
};

namespace detail {

inline NamedConfig make_config(std::string name, std::vector<ProjPoint> coords, std::optional<Coloring> coloring) {
  Geometry g = geometry_from_points(coords);
  return {std::move(name), std::move(g), std::move(coords), std::move(coloring)};
}

inline ProjPoint pt(const FiniteField& f, std::initializer_list<FieldElem> c) { return ProjPoint(f, std::vector<FieldElem>(c)); }

inline std::string field_label(const FiniteField& f) { return "GF(" + std::to_string(f.size()) + ")"; }

}  // namespace detail

// Additive subgroup generated by `gens`: their span over the prime field.
inline std::vector<FieldElem> additive_span(const FiniteField& f, const std::vector<FieldElem>& gens) {
  std::set<FieldElem> g{f.zero()};
  for (auto x : gens) {
    std::set<FieldElem> next;
    for (auto y : g)
      for (long c = 0; c < f.characteristic(); ++c) next.insert(f.add(y, f.mul(f.from_int(c), x)));
    g = std::move(next);
  }
  return {g.begin(), g.end()};
}

// The subgroup of order m of the multiplicative group, ascending by code.
inline std::vector<FieldElem> multiplicative_subgroup(const FiniteField& f, long m) {
  if (m < 1 || (f.size() - 1) % m != 0) throw InvalidArguments("no multiplicative subgroup of order " + std::to_string(m));
  FieldElem gen = f.pow(f.primitive(), (f.size() - 1) / m);
  std::vector<FieldElem> out;
  FieldElem x = f.one();
  for (long i = 0; i < m; ++i) {
    out.push_back(x);
    x = f.mul(x, gen);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The nine points {(0,-1,w), (w,0,-1), (-1,w,0) : w^3 = 1}.
inline NamedConfig inflection_config(const FiniteField& f) {
  auto roots = elements_of_order(f, 3);
  if (roots.empty()) throw UnsupportedField(detail::field_label(f) + " has no primitive cube roots of unity");
  roots.insert(roots.begin(), f.one());
  const FieldElem zero = f.zero(), m1 = f.neg(f.one());
  std::vector<ProjPoint> pts;
  for (auto w : roots) {
    pts.push_back(detail::pt(f, {zero, m1, w}));
    pts.push_back(detail::pt(f, {w, zero, m1}));
    pts.push_back(detail::pt(f, {m1, w, zero}));
  }
  return detail::make_config("inflection " + detail::field_label(f), std::move(pts), uniform_coloring(9, Colour::Bicoloured));
}

// Points (g,0,1), (g,1,1), (-g,1,0) for g in G on three lines concurrent at
// (1,0,0), which is added when include_center is set.
inline NamedConfig additive_group_config(const FiniteField& f, const std::vector<FieldElem>& G, bool include_center) {
  std::set<FieldElem> gs(G.begin(), G.end());
  if (gs.empty() || !gs.count(f.zero())) throw InvalidArguments("additive subgroup must contain 0");
  for (auto a : gs)
    for (auto b : gs)
      if (!gs.count(f.add(a, b))) throw InvalidArguments("element set is not additively closed");
  const std::size_t need = include_center ? 2 : 3;
  if (gs.size() < need) throw InvalidArguments("additive subgroup too small");
  const FieldElem zero = f.zero(), one = f.one();
  std::vector<ProjPoint> pts;
  for (auto g : gs) pts.push_back(detail::pt(f, {g, zero, one}));
  for (auto g : gs) pts.push_back(detail::pt(f, {g, one, one}));
  for (auto g : gs) pts.push_back(detail::pt(f, {f.neg(g), one, zero}));
  if (include_center) pts.push_back(detail::pt(f, {one, zero, zero}));
  const int n = int(pts.size());
  std::string name = "additive " + detail::field_label(f) + " |G|=" + std::to_string(gs.size()) + (include_center ? " +P" : "");
  return detail::make_config(std::move(name), std::move(pts), uniform_coloring(n, Colour::Bicoloured));
}

// Points (1,g,0), (1,0,g), (0,-g,1) for g in G on three non-concurrent lines.
inline NamedConfig multiplicative_group_config(const FiniteField& f, const std::vector<FieldElem>& G) {
  std::set<FieldElem> gs(G.begin(), G.end());
  if (gs.size() < 3) throw InvalidArguments("multiplicative subgroup needs at least 3 elements");
  if (gs.count(f.zero()) || !gs.count(f.one())) throw InvalidArguments("not a multiplicative subgroup");
  for (auto a : gs)
    for (auto b : gs)
      if (!gs.count(f.mul(a, b))) throw InvalidArguments("element set is not multiplicatively closed");
  const FieldElem zero = f.zero(), one = f.one();
  std::vector<ProjPoint> pts;
  for (auto g : gs) pts.push_back(detail::pt(f, {one, g, zero}));
  for (auto g : gs) pts.push_back(detail::pt(f, {one, zero, g}));
  for (auto g : gs) pts.push_back(detail::pt(f, {zero, f.neg(g), one}));
  const int n = int(pts.size());
  return detail::make_config("multiplicative " + detail::field_label(f) + " |G|=" + std::to_string(gs.size()), std::move(pts),
                             uniform_coloring(n, Colour::Bicoloured));
}

// Points of AG(3,p) whose last coordinate is 0, 1 or 2.
inline NamedConfig parallel_planes_config(int p) {
  if (!is_prime(p) || p < 3) throw InvalidArguments("parallel planes need a prime p >= 3");
  auto f = field_make(p, 1);
  auto ag = ag_as_geometry(3, f);
  std::vector<ProjPoint> pts;
  for (const auto& c : ag.coords)
    if (c.coords[3].code <= 2) pts.push_back(c);
  const int n = int(pts.size());
  return detail::make_config("parallel-planes p=" + std::to_string(p), std::move(pts), uniform_coloring(n, Colour::Bicoloured));
}

// Points of AG(2,p) whose last coordinate is in {0, ..., m-1}.
inline NamedConfig parallel_lines_config(int p, int m) {
  if (!is_prime(p)) throw InvalidArguments("parallel lines need a prime p");
  if (m < 1 || m > p) throw InvalidArguments("AG(2," + std::to_string(p) + ") has no " + std::to_string(m) + " parallel lines");
  auto f = field_make(p, 1);
  auto ag = ag_as_geometry(2, f);
  std::vector<ProjPoint> pts;
  for (const auto& c : ag.coords)
    if (int(c.coords[2].code) < m) pts.push_back(c);
  return detail::make_config("parallel-lines p=" + std::to_string(p) + " m=" + std::to_string(m), std::move(pts), std::nullopt);
}

// AG(2,q) inside PG(2,q) together with the point (0,0,1) at infinity.
inline NamedConfig ag_plus(long q) {
  auto f = field_of_order(q);
  auto ag = ag_as_geometry(2, f);
  auto pts = ag.coords;
  pts.push_back(detail::pt(f, {f.zero(), f.zero(), f.one()}));
  const int n = int(pts.size());
  Coloring c = uniform_coloring(n, Colour::Bicoloured);
  c.back() = Colour::RedOnly;
  std::optional<Coloring> coloring;
  if (q == 3) coloring = c;
  return detail::make_config("AG(2," + std::to_string(q) + ")+", std::move(pts), coloring);
}

namespace detail {

// The first two lines of the point table and their common point.
inline std::vector<int> first_two_lines_meeting(const ProjectiveSpace& s, std::vector<int>& l2, int& common) {
  const auto& lines = s.lines();
  std::vector<int> l1 = lines[0];
  l2 = lines[1];
  common = -1;
  for (int p : l1)
    if (std::find(l2.begin(), l2.end(), p) != l2.end()) common = p;
  return l1;
}

inline std::vector<ProjPoint> keep(const ProjectiveSpace& s, const std::vector<char>& removed) {
  std::vector<ProjPoint> out;
  for (int i = 0; i < s.n_points(); ++i)
    if (!removed[i]) out.push_back(s.point(i));
  return out;
}

}  // namespace detail

// Deletions from and extensions of PG(2,q) / AG(2,q) listed among the small
// 4-SG geometries. Where a choice of lines or points is involved, the
// least-index ones in the coordinate tables are taken.
inline NamedConfig table4_deletion(const std::string& name) {
  if (name == "AG(2,4)+") {
    auto c = ag_plus(4);
    c.name = name;
    return c;
  }
  if (name == "20.1") {
    ProjectiveSpace s(2, field_make(2, 2));
    std::vector<char> removed(s.n_points(), 0);
    removed[0] = 1;
    return detail::make_config(name, detail::keep(s, removed), std::nullopt);
  }
  if (name == "20.2") {
    auto c = parallel_lines_config(5, 4);
    c.name = name;
    return c;
  }
  if (name == "21.1" || name == "24.1") {
    auto ag = ag_as_geometry(2, field_make(5, 1));
    std::vector<char> removed(ag.coords.size(), 0);
    if (name == "24.1") {
      removed[0] = 1;
    } else {
      const auto& line = ag.geometry.lines()[0];
      for (int i = 0; i < 4; ++i) removed[line[i]] = 1;
    }
    std::vector<ProjPoint> pts;
    for (std::size_t i = 0; i < ag.coords.size(); ++i)
      if (!removed[i]) pts.push_back(ag.coords[i]);
    return detail::make_config(name, std::move(pts), std::nullopt);
  }
  if (name == "21.2" || name == "22.8" || name == "24.2") {
    ProjectiveSpace s(2, field_make(5, 1));
    std::vector<int> l2;
    int common = -1;
    auto l1 = detail::first_two_lines_meeting(s, l2, common);
    std::vector<char> removed(s.n_points(), 0);
    for (int p : l1) removed[p] = 1;
    for (int p : l2) removed[p] = 1;
    if (name == "21.2") {
      removed[common] = 0;
    } else if (name == "22.8") {
      for (const auto* l : {&l1, &l2})
        for (int p : *l)
          if (p != common) {
            removed[p] = 0;
            break;
          }
    } else {
      removed[common] = 0;
      int kept = 0;
      for (int p : l1)
        if (p != common && kept < 3) {
          removed[p] = 0;
          ++kept;
        }
    }
    return detail::make_config(name, detail::keep(s, removed), std::nullopt);
  }
  throw InvalidArguments("unknown deletion name '" + name + "'");
}

inline const std::vector<std::string>& table4_names() {
  static const std::vector<std::string> names{"AG(2,4)+", "20.1", "20.2", "21.1", "21.2", "22.8", "24.1", "24.2"};
  return names;
}

// AG(2,3) bicoloured plus two points at infinity, (0,0,1) blue-only and
// (0,1,0) red-only, over a field of characteristic 3.
inline NamedConfig van_wamelen_11(const FiniteField& f) {
  if (f.characteristic() != 3) throw UnsupportedField("the 11-point configuration needs characteristic 3");
  std::vector<ProjPoint> pts;
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b) pts.push_back(detail::pt(f, {f.one(), f.from_int(a), f.from_int(b)}));
  pts.push_back(detail::pt(f, {f.zero(), f.zero(), f.one()}));
  pts.push_back(detail::pt(f, {f.zero(), f.one(), f.zero()}));
  Coloring c = uniform_coloring(11, Colour::Bicoloured);
  c[9] = Colour::BlueOnly;
  c[10] = Colour::RedOnly;
  return detail::make_config("van-wamelen-11 " + detail::field_label(f), std::move(pts), c);
}

inline NamedConfig projective_space_config(int n, long q) {
  auto pg = pg_as_geometry(n, field_of_order(q));
  const int size = pg.geometry.n_points();
  std::optional<Coloring> c = uniform_coloring(size, Colour::Bicoloured);
  return {"PG(" + std::to_string(n) + "," + std::to_string(q) + ")", std::move(pg.geometry), std::move(pg.coords), c};
}

inline NamedConfig affine_space_config(int n, long q) {
  auto ag = ag_as_geometry(n, field_of_order(q));
  const int size = ag.geometry.n_points();
  std::optional<Coloring> c;
  if (q >= 3) c = uniform_coloring(size, Colour::Bicoloured);
  return {"AG(" + std::to_string(n) + "," + std::to_string(q) + ")", std::move(ag.geometry), std::move(ag.coords), c};
}

}  // namespace sylgal
