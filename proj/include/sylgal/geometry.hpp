#pragma once

// Finite linear spaces: points 0..n-1 plus the lines of size >= 3. Pairs not
// covered by a stored line form implicit 2-lines.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sylgal/error.hpp"

namespace sylgal {

using Point = int;
using PointList = std::vector<Point>;
using Line = std::vector<Point>;

class Geometry {
public:
  Geometry() = default;

  // Sorts every line and the line list. Invalid inputs are accepted and
  // recorded; see violation().
  Geometry(int n_points, std::vector<Line> lines) : n_(n_points), lines_(std::move(lines)) {
    for (auto& l : lines_) std::sort(l.begin(), l.end());
    std::sort(lines_.begin(), lines_.end());
    build_index();
  }

  int n_points() const { return n_; }
  const std::vector<Line>& lines() const { return lines_; }
  std::size_t n_lines() const { return lines_.size(); }

  // Index of the stored line through a and b, or -1 for an implicit 2-line.
  int line_index(Point a, Point b) const { return pair_line_[std::size_t(a) * n_ + b]; }
  bool on_stored_line(Point a, Point b) const { return line_index(a, b) >= 0; }

  const std::vector<int>& lines_through(Point p) const { return point_lines_[p]; }

  // Number of lines through p, counting implicit 2-lines.
  int degree(Point p) const {
    int covered = 0;
    for (int li : point_lines_[p]) covered += int(lines_[li].size()) - 1;
    return int(point_lines_[p].size()) + (n_ - 1 - covered);
  }

  // Number of uncovered pairs, i.e. implicit 2-lines.
  long two_line_count() const {
    long covered = 0;
    for (const auto& l : lines_) covered += long(l.size()) * long(l.size() - 1) / 2;
    return long(n_) * (n_ - 1) / 2 - covered;
  }

  std::size_t max_line_size() const {
    std::size_t m = n_ >= 2 ? 2 : std::size_t(n_);
    for (const auto& l : lines_) m = std::max(m, l.size());
    return m;
  }

  bool is_collinear() const {
    if (n_ <= 2) return true;
    return lines_.size() == 1 && int(lines_[0].size()) == n_;
  }

  const std::optional<std::string>& violation() const { return violation_; }
  bool valid() const { return !violation_.has_value(); }

  // Relabels point i as sigma[i].
  Geometry permuted(const std::vector<Point>& sigma) const {
    std::vector<Line> out;
    out.reserve(lines_.size());
    for (const auto& l : lines_) {
      Line m;
      m.reserve(l.size());
      for (Point p : l) m.push_back(sigma[p]);
      out.push_back(std::move(m));
    }
    return Geometry(n_, std::move(out));
  }

  // Restriction to `subset` (sorted or not); point subset[i] becomes i.
  Geometry induced(const PointList& subset) const {
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < subset.size(); ++i) index[subset[i]] = int(i);
    std::vector<Line> out;
    for (const auto& l : lines_) {
      Line m;
      for (Point p : l)
        if (index[p] >= 0) m.push_back(index[p]);
      if (m.size() >= 3) out.push_back(std::move(m));
    }
    return Geometry(int(subset.size()), std::move(out));
  }

  friend bool operator==(const Geometry& a, const Geometry& b) {
    return a.n_ == b.n_ && a.lines_ == b.lines_;
  }

private:
  void build_index() {
    violation_.reset();
    if (n_ < 1) {
      violation_ = "geometry needs at least one point";
      n_ = std::max(n_, 0);
    }
    pair_line_.assign(std::size_t(n_) * n_, -1);
    point_lines_.assign(n_, {});
    for (std::size_t li = 0; li < lines_.size(); ++li) {
      const auto& l = lines_[li];
      if (l.size() < 3 && !violation_) violation_ = "line " + std::to_string(li) + " has fewer than 3 points";
      bool in_range = true;
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] < 0 || l[i] >= n_) {
          in_range = false;
          if (!violation_) violation_ = "line " + std::to_string(li) + " has point " + std::to_string(l[i]) + " out of range";
        } else if (i > 0 && l[i] == l[i - 1] && !violation_) {
          violation_ = "line " + std::to_string(li) + " repeats point " + std::to_string(l[i]);
        }
      }
      if (!in_range) continue;
      for (Point p : l) point_lines_[p].push_back(int(li));
      for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) {
          if (l[i] == l[j]) continue;
          int& a = pair_line_[std::size_t(l[i]) * n_ + l[j]];
          int& b = pair_line_[std::size_t(l[j]) * n_ + l[i]];
          if (a >= 0 && a != int(li)) {
            if (!violation_)
              violation_ = "pair {" + std::to_string(l[i]) + "," + std::to_string(l[j]) + "} lies on two lines";
            continue;
          }
          a = b = int(li);
        }
    }
    for (auto& pl : point_lines_) pl.erase(std::unique(pl.begin(), pl.end()), pl.end());
  }

  int n_ = 0;
  std::vector<Line> lines_;
  std::vector<int> pair_line_;
  std::vector<std::vector<int>> point_lines_;
  std::optional<std::string> violation_;
};

// Returns the first violated invariant, or nothing when the geometry is a
// valid linear space.
inline std::optional<std::string> validate(const Geometry& g) { return g.violation(); }

inline void require_valid(const Geometry& g) {
  if (!g.valid()) throw InvalidArguments("geometry violates linear-space axioms: " + *g.violation());
}

inline PointList line_through(const Geometry& g, Point a, Point b) {
  if (a == b) throw InvalidArguments("line_through needs two distinct points");
  if (a < 0 || b < 0 || a >= g.n_points() || b >= g.n_points()) throw InvalidArguments("point out of range");
  int li = g.line_index(a, b);
  if (li >= 0) return g.lines()[li];
  return a < b ? PointList{a, b} : PointList{b, a};
}

struct Flat {
  PointList points;  // sorted

  std::size_t size() const { return points.size(); }
  bool contains(Point p) const { return std::binary_search(points.begin(), points.end(), p); }
  friend bool operator==(const Flat&, const Flat&) = default;
};

namespace detail {

// Closure into a caller-owned membership buffer; returns the member count.
inline int close_into(const Geometry& g, std::vector<char>& in, std::vector<Point>& members) {
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    Point p = members[idx];
    for (std::size_t j = 0; j < idx; ++j) {
      int li = g.line_index(p, members[j]);
      if (li < 0) continue;
      for (Point r : g.lines()[li])
        if (!in[r]) {
          in[r] = 1;
          members.push_back(r);
        }
    }
  }
  return int(members.size());
}

inline int closure_size(const Geometry& g, const PointList& seed, std::vector<char>& in, std::vector<Point>& members) {
  std::fill(in.begin(), in.end(), 0);
  members.clear();
  for (Point p : seed)
    if (!in[p]) {
      in[p] = 1;
      members.push_back(p);
    }
  return close_into(g, in, members);
}

}  // namespace detail

inline Flat closure(const Geometry& g, const PointList& seed) {
  for (Point p : seed)
    if (p < 0 || p >= g.n_points()) throw InvalidArguments("seed point out of range");
  std::vector<char> in(g.n_points(), 0);
  std::vector<Point> members;
  detail::closure_size(g, seed, in, members);
  std::sort(members.begin(), members.end());
  return Flat{std::move(members)};
}

namespace detail {

// Incremental closure on a point bitset.
class BitClosure {
public:
  explicit BitClosure(const Geometry& g) : g_(g), words_((g.n_points() + 63) / 64) {}

  std::vector<std::uint64_t> empty() const { return std::vector<std::uint64_t>(words_, 0); }

  static bool has(const std::vector<std::uint64_t>& s, Point p) { return (s[p >> 6] >> (p & 63)) & 1; }

  static int count(const std::vector<std::uint64_t>& s) {
    int c = 0;
    for (auto w : s) c += __builtin_popcountll(w);
    return c;
  }

  void add(std::vector<std::uint64_t>& s, Point c) {
    if (has(s, c)) return;
    set(s, c);
    queue_.assign(1, c);
    while (!queue_.empty()) {
      Point p = queue_.back();
      queue_.pop_back();
      for (int li : g_.lines_through(p)) {
        const auto& line = g_.lines()[li];
        int inside = 0;
        for (Point r : line) inside += has(s, r) ? 1 : 0;
        if (inside < 2 || inside == int(line.size())) continue;
        for (Point r : line)
          if (!has(s, r)) {
            set(s, r);
            queue_.push_back(r);
          }
      }
    }
  }

private:
  static void set(std::vector<std::uint64_t>& s, Point p) { s[p >> 6] |= std::uint64_t(1) << (p & 63); }

  const Geometry& g_;
  std::size_t words_;
  std::vector<Point> queue_;
};

// Is there an increasing sequence of `left` more points, each outside the
// closure so far, whose addition generates everything?
inline bool generates_within(BitClosure& bc, const std::vector<std::uint64_t>& s, int start, int left, int n) {
  for (Point c = start; c < n; ++c) {
    if (BitClosure::has(s, c)) continue;
    auto next = s;
    bc.add(next, c);
    if (BitClosure::count(next) == n) return true;
    if (left > 1 && generates_within(bc, next, c + 1, left - 1, n)) return true;
  }
  return false;
}

}  // namespace detail

// Size of a minimum generating set, minus one. Greedy gives an upper bound
// b; a generating set smaller than b exists iff one of size b-1 does, which
// is searched exhaustively (each new point outside the closure so far).
inline int dimension(const Geometry& g) {
  const int n = g.n_points();
  if (n <= 1) return 0;
  detail::BitClosure bc(g);
  auto s = bc.empty();
  int best = 0;
  for (Point p = 0; p < n; ++p)
    if (!detail::BitClosure::has(s, p)) {
      bc.add(s, p);
      ++best;
    }
  while (best > 1 && detail::generates_within(bc, bc.empty(), 0, best - 1, n)) --best;
  return best - 1;
}

struct ContractionResult {
  Geometry geometry;
  std::vector<PointList> fibers;  // residue point -> original points outside the flat
};

// Residue at a proper flat: points are the flats covering it, lines the flats
// one step higher.
inline ContractionResult contraction(const Geometry& g, const Flat& flat) {
  require_valid(g);
  const int n = g.n_points();
  if (flat.points.empty()) throw InvalidArguments("contraction needs a non-empty flat");
  if (closure(g, flat.points) != flat) throw InvalidArguments("contraction needs a closed flat");
  if (int(flat.size()) == n) throw InvalidArguments("contraction needs a proper flat");

  std::vector<char> in(n, 0);
  std::vector<Point> members;
  std::vector<int> residue_of(n, -1);
  for (Point p : flat.points) residue_of[p] = -2;
  std::vector<PointList> fibers;
  for (Point x = 0; x < n; ++x) {
    if (residue_of[x] != -1) continue;
    PointList seed = flat.points;
    seed.push_back(x);
    detail::closure_size(g, seed, in, members);
    PointList fiber;
    for (Point y : members) {
      if (residue_of[y] == -2) continue;
      if (residue_of[y] != -1) throw GeometryAnomaly("flats through the contracted flat overlap at point " + std::to_string(y));
      residue_of[y] = int(fibers.size());
      fiber.push_back(y);
    }
    std::sort(fiber.begin(), fiber.end());
    fibers.push_back(std::move(fiber));
  }

  const int m = int(fibers.size());
  std::vector<char> joined(std::size_t(m) * m, 0);
  std::vector<Line> lines;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (joined[std::size_t(a) * m + b]) continue;
      PointList seed = flat.points;
      seed.push_back(fibers[a][0]);
      seed.push_back(fibers[b][0]);
      detail::closure_size(g, seed, in, members);
      Line line;
      for (int r = 0; r < m; ++r) {
        std::size_t inside = 0;
        for (Point y : fibers[r]) inside += in[y] ? 1 : 0;
        if (inside == fibers[r].size()) line.push_back(r);
        else if (inside != 0) throw GeometryAnomaly("flat splits residue point " + std::to_string(r));
      }
      for (std::size_t i = 0; i < line.size(); ++i)
        for (std::size_t j = i + 1; j < line.size(); ++j) {
          char& cell = joined[std::size_t(line[i]) * m + line[j]];
          if (cell) throw GeometryAnomaly("residue pair lies on two residue lines");
          cell = 1;
        }
      if (line.size() >= 3) lines.push_back(std::move(line));
    }
  Geometry residue(m, std::move(lines));
  if (!residue.valid()) throw GeometryAnomaly(*residue.violation());
  return {std::move(residue), std::move(fibers)};
}

inline bool is_k_sg(const Geometry& g, int k) {
  if (k < 2) throw InvalidArguments("k-SG needs k >= 2");
  for (const auto& l : g.lines())
    if (int(l.size()) < k) return false;
  if (k >= 3 && g.two_line_count() > 0) return false;
  return true;
}

// Points whose contraction has every line (including 2-lines) of size >= 4.
inline PointList rich_points(const Geometry& g) {
  require_valid(g);
  if (dimension(g) < 3) throw UnsupportedDimension("rich points need dimension >= 3");
  PointList rich;
  for (Point p = 0; p < g.n_points(); ++p) {
    auto residue = contraction(g, Flat{{p}});
    if (is_k_sg(residue.geometry, 4)) rich.push_back(p);
  }
  return rich;
}

// Distinct closures of non-collinear triples.
inline std::vector<Flat> planes(const Geometry& g) {
  const int n = g.n_points();
  std::vector<Flat> out;
  std::vector<std::vector<char>> member_of;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      for (Point c = b + 1; c < n; ++c) {
        int li = g.line_index(a, b);
        if (li >= 0 && li == g.line_index(a, c)) continue;
        bool known = false;
        for (const auto& mem : member_of)
          if (mem[a] && mem[b] && mem[c]) {
            known = true;
            break;
          }
        if (known) continue;
        Flat f = closure(g, {a, b, c});
        std::vector<char> mem(n, 0);
        for (Point p : f.points) mem[p] = 1;
        member_of.push_back(std::move(mem));
        out.push_back(std::move(f));
      }
  std::sort(out.begin(), out.end(), [](const Flat& x, const Flat& y) { return x.points < y.points; });
  return out;
}

}  // namespace sylgal
