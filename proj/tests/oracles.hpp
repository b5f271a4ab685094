#pragma once

// Independent brute-force reference implementations used to cross-check the
// library. Deliberately naive.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "sylgal/coloring.hpp"
#include "sylgal/galois.hpp"
#include "sylgal/geometry.hpp"

namespace oracle {

inline std::set<std::uint64_t> line_masks(const sylgal::Geometry& g) {
  std::set<std::uint64_t> out;
  for (const auto& l : g.lines()) {
    std::uint64_t m = 0;
    for (int p : l) m |= std::uint64_t(1) << p;
    out.insert(m);
  }
  return out;
}

inline bool maps_onto(const std::vector<std::vector<int>>& lines, const std::set<std::uint64_t>& target,
                      const std::vector<int>& sigma) {
  for (const auto& l : lines) {
    std::uint64_t m = 0;
    for (int p : l) m |= std::uint64_t(1) << sigma[p];
    if (!target.count(m)) return false;
  }
  return true;
}

// Number of permutations preserving the line set (and colours if given).
inline long brute_automorphisms(const sylgal::Geometry& g, const sylgal::Coloring* c = nullptr) {
  const int n = g.n_points();
  auto target = line_masks(g);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  long count = 0;
  do {
    if (c) {
      bool ok = true;
      for (int p = 0; p < n && ok; ++p) ok = (*c)[p] == (*c)[sigma[p]];
      if (!ok) continue;
    }
    if (maps_onto(g.lines(), target, sigma)) ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

inline std::optional<std::vector<int>> brute_isomorphism(const sylgal::Geometry& a, const sylgal::Geometry& b,
                                                         const sylgal::Coloring* ca = nullptr,
                                                         const sylgal::Coloring* cb = nullptr) {
  if (a.n_points() != b.n_points() || a.n_lines() != b.n_lines()) return std::nullopt;
  const int n = a.n_points();
  auto target = line_masks(b);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    if (ca && cb) {
      bool ok = true;
      for (int p = 0; p < n && ok; ++p) ok = (*ca)[p] == (*cb)[sigma[p]];
      if (!ok) continue;
    }
    if (maps_onto(a.lines(), target, sigma)) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

inline sylgal::Geometry fano() {
  return sylgal::Geometry(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

// Plain backtracking over every assignment of PG points, in index order,
// with collinearity decided by coordinate rank. No normalization at all.
inline bool unpruned_embeds(const sylgal::Geometry& g, const sylgal::ProjectiveSpace& ps) {
  const int n = g.n_points(), m = ps.n_points();
  std::vector<char> col(std::size_t(m) * m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        col[(std::size_t(a) * m + b) * m + c] = sylgal::coordinate_rank({ps.point(a), ps.point(b), ps.point(c)}) <= 2;
  auto abstract = [&](int a, int b, int c) {
    for (const auto& l : g.lines())
      if (std::count(l.begin(), l.end(), a) && std::count(l.begin(), l.end(), b) && std::count(l.begin(), l.end(), c))
        return true;
    return false;
  };
  std::vector<int> img(n, -1);
  std::vector<char> used(m, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < m; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int a = 0; a < v && ok; ++a)
        for (int b = a + 1; b < v && ok; ++b)
          ok = abstract(a, b, v) == bool(col[(std::size_t(img[a]) * m + img[b]) * m + c]);
      if (!ok) continue;
      img[v] = c;
      used[c] = 1;
      if (self(self, v + 1)) return true;
      used[c] = 0;
    }
    img[v] = -1;
    return false;
  };
  return rec(rec, 0);
}

}  // namespace oracle
