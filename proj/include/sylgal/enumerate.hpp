#pragma once

// Isomorph-free generation of linear spaces on a fixed number of points with
// a minimum line size and an optional colouring constraint (MR or chromatic).
//
// The search covers point pairs one at a time: the first pair that must lie
// on a long line is given every admissible line through it, built from pairs
// that are still uncovered. Untouched points of one colour class are
// interchangeable, so only the smallest of them may join a new line.
// Complete structures are deduplicated by canonical form.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sylgal/canon.hpp"
#include "sylgal/coloring.hpp"
#include "sylgal/error.hpp"
#include "sylgal/geometry.hpp"
#include "sylgal/parallel.hpp"

namespace sylgal {

enum class ColourFilter { None, Mr, Chromatic };

inline std::string filter_name(ColourFilter f) {
  switch (f) {
    case ColourFilter::Mr: return "mr";
    case ColourFilter::Chromatic: return "chromatic";
    default: return "none";
  }
}

inline ColourFilter parse_filter(const std::string& s) {
  if (s == "none" || s.empty()) return ColourFilter::None;
  if (s == "mr") return ColourFilter::Mr;
  if (s == "chromatic") return ColourFilter::Chromatic;
  throw InvalidArguments("unknown colour filter '" + s + "'");
}

struct EnumSpec {
  int n_points = 3;
  int min_line_size = 3;  // 2 = unrestricted
  bool require_non_collinear = true;
  ColourFilter colour_filter = ColourFilter::None;
};

struct EnumOptions {
  double budget_seconds = 0;  // 0 = unlimited
  int workers = 0;            // 0 = worker_count()
  int levels = 0;             // points whose lines are completed before splitting; 0 = automatic
};

struct EnumeratedGeometry {
  Geometry geometry;
  std::optional<Coloring> coloring;
  CanonicalForm form;  // coloured form when a colouring is attached
};

struct Enumeration {
  EnumSpec spec;
  std::vector<EnumeratedGeometry> items;  // sorted by form
  long long nodes = 0;
  long long leaves = 0;
};

class PartialResult : public Error {
public:
  PartialResult(std::size_t tasks_done, std::size_t tasks_total, std::size_t found, long long nodes)
      : Error("budget exhausted after " + std::to_string(tasks_done) + " of " + std::to_string(tasks_total) +
              " search branches (" + std::to_string(found) + " found so far, " + std::to_string(nodes) + " nodes)"),
        tasks_done(tasks_done), tasks_total(tasks_total), found(found), nodes(nodes) {}

  std::size_t tasks_done, tasks_total, found;
  long long nodes;
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask(1) << i; }

inline int popcount(Mask m) { return __builtin_popcountll(m); }

inline int lowest(Mask m) { return __builtin_ctzll(m); }

// Everything the search needs to know about one colour composition.
struct EnumProblem {
  int n = 0;
  int k = 3;                  // minimum line size
  int long_min = 3;           // minimum size of a stored line
  int max_line = 0;           // upper bound on stored line size
  bool non_collinear = true;
  bool star_order = false;    // lines through 0 non-increasing, first line longest
  ColourFilter filter = ColourFilter::None;
  std::vector<std::uint8_t> colour;  // bitmask per point, 0 when uncoloured
  std::vector<int> cls;              // interchangeability class per point
  std::array<Mask, 3> with_bit{};    // with_bit[c]: points carrying colour bit c (1 or 2)
  std::vector<Mask> required;        // pairs that must lie on a stored line

  bool line_ok(Mask line) const {
    if (filter == ColourFilter::None) return true;
    if (filter == ColourFilter::Mr) return (line & with_bit[1]) && (line & with_bit[2]);
    for (int c : {1, 2}) {
      const Mask same = line & with_bit[c], other = line & with_bit[3 - c];
      if (popcount(same) < 2) continue;
      // a pair {x,y} in `same` fails exactly when `other` lies inside {x,y}
      const int o = popcount(other);
      if (o == 0 || (o == 1 && (other & same)) || (o == 2 && (other & same) == other)) return false;
    }
    return true;
  }

  // Can the uncovered required pair {x,y} still be placed on a line drawn
  // from the common candidates C?
  bool pair_feasible(int x, int y, Mask C) const {
    if (popcount(C) < long_min - 2) return false;
    if (filter == ColourFilter::None) return true;
    const std::uint8_t shared = colour[x] & colour[y];
    for (int c : {1, 2})
      if ((shared & c) && !(C & with_bit[3 - c])) return false;
    return true;
  }
};

struct SearchNode {
  std::array<Mask, 64> unc{};  // uncovered partners per point
  Mask fresh = 0;              // points on no line yet
  std::vector<Mask> lines;     // stored lines
  int first_size = 0;
  int last_at_zero = 64;
};

class EnumSearch {
public:
  using Clock = std::chrono::steady_clock;

  EnumSearch(const EnumProblem& pb, std::map<CanonicalForm, EnumeratedGeometry>& out,
             std::optional<Clock::time_point> deadline)
      : pb_(pb), out_(out), deadline_(deadline) {}

  static SearchNode initial(const EnumProblem& pb) {
    SearchNode node;
    const Mask all = pb.n == 64 ? ~Mask(0) : bit(pb.n) - 1;
    for (int x = 0; x < pb.n; ++x) node.unc[x] = all & ~bit(x);
    node.fresh = all;
    return node;
  }

  // From node `n`, either search to completion or, when `frontier` is
  // given, stop at every node whose points below `level` have all their
  // required pairs covered and record it there.
  void resume(const SearchNode& n, int level = -1, std::vector<SearchNode>* frontier = nullptr) {
    node_ = n;
    level_ = level;
    frontier_ = frontier;
    rec();
  }

  const SearchNode& node() const { return node_; }

  long long nodes = 0, leaves = 0;

private:
  void rec() {
    if ((++nodes & 1023) == 0 && deadline_ && Clock::now() > *deadline_) throw budget_exceeded{};
    const int n = pb_.n;
    for (int x = 0; x < n; ++x) {
      Mask m = node_.unc[x] & pb_.required[x] & ~(bit(x + 1) - 1);
      if (!m) continue;
      if (frontier_ && x >= level_) {
        frontier_->push_back(node_);
        return;
      }
      return branch(x, lowest(m), false);
    }
    if (frontier_) {
      frontier_->push_back(node_);
      return;
    }
    // Only optional pairs remain; one of them may still extend to a line.
    for (int x = 0; x < n; ++x)
      for (Mask m = node_.unc[x] & ~(bit(x + 1) - 1); m; m &= m - 1) {
        int y = lowest(m);
        if (node_.unc[x] & node_.unc[y]) return branch(x, y, true);
      }
    leaf();
  }

  void branch(int a, int b, bool optional) {
    if (optional) {
      // leave {a,b} as a 2-line
      node_.unc[a] &= ~bit(b);
      node_.unc[b] &= ~bit(a);
      const Mask fresh = node_.fresh;
      node_.fresh &= ~(bit(a) | bit(b));
      if (feasible()) rec();
      node_.fresh = fresh;
      node_.unc[a] |= bit(b);
      node_.unc[b] |= bit(a);
    }
    int cap = pb_.max_line;
    if (pb_.star_order) {
      if (node_.first_size) cap = std::min(cap, node_.first_size);
      if (a == 0) cap = std::min(cap, node_.last_at_zero);
    }
    const Mask C = node_.unc[a] & node_.unc[b];
    extend(a, b, bit(a) | bit(b), 2, C, 0, cap);
  }

  // Adds candidates from C (ascending, all above the previous pick) to line.
  void extend(int a, int b, Mask line, int size, Mask C, unsigned closed, int cap) {
    if (size >= pb_.long_min && pb_.line_ok(line)) place(a, line, size);
    if (size >= cap) return;
    for (Mask m = C; m; m &= m - 1) {
      const int v = lowest(m);
      const bool is_fresh = node_.fresh & bit(v);
      const unsigned cbit = 1u << pb_.cls[v];
      if (is_fresh && (closed & cbit)) continue;
      const Mask rest = (m & ~bit(v)) & node_.unc[v];
      extend(a, b, line | bit(v), size + 1, rest, closed, cap);
      if (is_fresh) closed |= cbit;
    }
  }

  void place(int a, Mask line, int size) {
    std::array<Mask, 64> saved;
    for (Mask m = line; m; m &= m - 1) {
      int x = lowest(m);
      saved[x] = node_.unc[x];
      node_.unc[x] &= ~line;
    }
    const Mask fresh = node_.fresh;
    const int first = node_.first_size, last0 = node_.last_at_zero;
    node_.fresh &= ~line;
    if (!node_.first_size) node_.first_size = size;
    if (a == 0) node_.last_at_zero = size;
    node_.lines.push_back(line);
    if (feasible()) rec();
    node_.lines.pop_back();
    node_.fresh = fresh;
    node_.first_size = first;
    node_.last_at_zero = last0;
    for (Mask m = line; m; m &= m - 1) {
      int x = lowest(m);
      node_.unc[x] = saved[x];
    }
  }

  bool feasible() const {
    const int n = pb_.n;
    for (int x = 0; x < n; ++x) {
      const Mask req = node_.unc[x] & pb_.required[x];
      if (!req) continue;
      for (Mask m = req & ~(bit(x + 1) - 1); m; m &= m - 1) {
        int y = lowest(m);
        if (!pb_.pair_feasible(x, y, node_.unc[x] & node_.unc[y])) return false;
      }
    }
    return true;
  }

  void leaf() {
    ++leaves;
    const int n = pb_.n;
    bool has_two_lines = false;
    for (int x = 0; x < n && !has_two_lines; ++x) has_two_lines = node_.unc[x] != 0;
    if (has_two_lines && pb_.k > 2) return;
    if (pb_.non_collinear && (n <= 2 || (node_.lines.size() == 1 && popcount(node_.lines[0]) == n))) return;
    std::vector<Line> lines;
    lines.reserve(node_.lines.size());
    for (Mask l : node_.lines) {
      Line pts;
      for (Mask m = l; m; m &= m - 1) pts.push_back(lowest(m));
      lines.push_back(std::move(pts));
    }
    Geometry g(n, std::move(lines));
    std::optional<Coloring> col;
    if (pb_.filter != ColourFilter::None) {
      col.emplace(n);
      for (int x = 0; x < n; ++x) (*col)[x] = Colour(pb_.colour[x]);
    }
    auto cl = canonical_labelling(g, col ? &*col : nullptr);
    if (out_.count(cl.form)) return;
    // store the canonical relabelling so the representative depends only on the class
    if (col) col = permuted(*col, cl.lab);
    out_.emplace(cl.form, EnumeratedGeometry{g.permuted(cl.lab), std::move(col), cl.form});
  }

public:
  struct budget_exceeded {};

private:
  const EnumProblem& pb_;
  std::map<CanonicalForm, EnumeratedGeometry>& out_;
  std::optional<Clock::time_point> deadline_;
  SearchNode node_;
  int level_ = -1;
  std::vector<SearchNode>* frontier_ = nullptr;
};

}  // namespace detail

namespace detail {

// Canonical form of the lines placed so far, with colours.
inline CanonicalForm partial_form(const EnumProblem& pb, const SearchNode& node) {
  std::vector<Line> lines;
  for (Mask l : node.lines) {
    Line pts;
    for (Mask m = l; m; m &= m - 1) pts.push_back(lowest(m));
    lines.push_back(std::move(pts));
  }
  Geometry g(pb.n, std::move(lines));
  if (pb.filter == ColourFilter::None) return canonical_form(g);
  Coloring c(pb.n);
  for (int x = 0; x < pb.n; ++x) c[x] = Colour(pb.colour[x]);
  return canonical_form(g, c);
}

inline EnumProblem make_problem(const EnumSpec& spec, std::vector<std::uint8_t> colour) {
  EnumProblem pb;
  const int n = spec.n_points, k = spec.min_line_size;
  pb.n = n;
  pb.k = k;
  pb.long_min = std::max(k, 3);
  pb.non_collinear = spec.require_non_collinear;
  pb.filter = spec.colour_filter;
  pb.star_order = spec.colour_filter == ColourFilter::None && k >= 3;
  pb.max_line = spec.require_non_collinear ? n - 1 : n;
  // an off-line point sees each point of a line on its own line of >= k points
  if (spec.require_non_collinear && k >= 3) pb.max_line = std::min(pb.max_line, (n - 1) / (k - 1));
  pb.colour = std::move(colour);
  pb.cls.assign(n, 0);
  pb.required.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    pb.cls[x] = pb.colour[x];
    for (int c : {1, 2})
      if (pb.colour[x] & c) pb.with_bit[c] |= bit(x);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool req = k >= 3;
      if (spec.colour_filter != ColourFilter::None) req = req || (pb.colour[x] & pb.colour[y]);
      if (req) pb.required[x] |= bit(y);
    }
  return pb;
}

// Colour compositions to search, one per red/blue-swap pair. Non-collinear
// chromatic geometries have at least six points of each colour.
inline std::vector<std::vector<std::uint8_t>> compositions(const EnumSpec& spec) {
  const int n = spec.n_points;
  std::vector<std::vector<std::uint8_t>> out;
  if (spec.colour_filter == ColourFilter::None) {
    out.emplace_back(n, 0);
    return out;
  }
  const int lo = spec.require_non_collinear ? 6 : 1;
  const int max_bi = spec.colour_filter == ColourFilter::Chromatic ? n : 0;
  for (int p = 0; p <= max_bi; ++p)
    for (int r = 0; 2 * r <= n - p; ++r) {
      const int b = n - p - r;
      if (r + p < lo || b + p < lo) continue;
      std::vector<std::uint8_t> c;
      c.insert(c.end(), r, std::uint8_t(1));
      c.insert(c.end(), b, std::uint8_t(2));
      c.insert(c.end(), p, std::uint8_t(3));
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace detail

// All geometries satisfying `spec`, one per isomorphism class. With a colour
// filter the classes are coloured structures under colour-preserving
// isomorphism; a colouring and its red/blue swap count separately.
inline Enumeration enumerate(const EnumSpec& spec, const EnumOptions& opts = {}) {
  const int n = spec.n_points;
  if (n < 3) throw InvalidArguments("enumeration needs at least 3 points");
  if (n > 64) throw UnsupportedSize("enumeration is limited to 64 points");
  if (spec.min_line_size < 2) throw InvalidArguments("minimum line size must be at least 2");
  using Clock = detail::EnumSearch::Clock;
  std::optional<Clock::time_point> deadline;
  if (opts.budget_seconds > 0)
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(opts.budget_seconds));
  const int workers = opts.workers > 0 ? opts.workers : worker_count();

  Enumeration result;
  result.spec = spec;
  std::map<CanonicalForm, EnumeratedGeometry> found;
  std::mutex mu;

  std::vector<detail::EnumProblem> problems;
  for (auto& c : detail::compositions(spec)) problems.push_back(detail::make_problem(spec, std::move(c)));

  // Complete the lines through point 0, then through point 1, and so on,
  // keeping one partial structure per isomorphism class after each step.
  // The surviving partial structures are then searched independently.
  struct Task {
    std::size_t problem;
    detail::SearchNode node;
  };
  std::vector<Task> tasks;
  const int levels = opts.levels > 0 ? opts.levels : std::max(1, n / 3);
  try {
    for (std::size_t i = 0; i < problems.size(); ++i) {
      std::vector<detail::SearchNode> states{detail::EnumSearch::initial(problems[i])};
      for (int level = 1; level <= levels; ++level) {
        std::map<CanonicalForm, detail::SearchNode> next;
        for (const auto& st : states) {
          std::vector<detail::SearchNode> frontier;
          detail::EnumSearch s(problems[i], found, deadline);
          s.resume(st, level, &frontier);
          result.nodes += s.nodes;
          for (auto& node : frontier) next.emplace(detail::partial_form(problems[i], node), std::move(node));
        }
        states.clear();
        for (auto& [form, node] : next) states.push_back(std::move(node));
      }
      for (auto& node : states) tasks.push_back({i, std::move(node)});
    }
  } catch (const detail::EnumSearch::budget_exceeded&) {
    throw PartialResult(0, 0, found.size(), result.nodes);
  }

  std::atomic<std::size_t> done{0};
  std::atomic<bool> out_of_time{false};
  parallel_for(
      tasks.size(),
      [&](std::size_t t) {
        if (out_of_time) return;
        std::map<CanonicalForm, EnumeratedGeometry> local;
        detail::EnumSearch s(problems[tasks[t].problem], local, deadline);
        bool finished = true;
        try {
          s.resume(tasks[t].node);
        } catch (const detail::EnumSearch::budget_exceeded&) {
          finished = false;
          out_of_time = true;
        }
        std::lock_guard lock(mu);
        result.nodes += s.nodes;
        result.leaves += s.leaves;
        for (auto& [form, item] : local) found.emplace(form, std::move(item));
        if (finished) ++done;
      },
      workers);
  if (out_of_time) throw PartialResult(done, tasks.size(), found.size(), result.nodes);

  if (spec.colour_filter != ColourFilter::None) {
    // searched compositions have red-only <= blue-only; add the swapped classes
    std::vector<EnumeratedGeometry> extra;
    for (const auto& [form, item] : found) {
      Coloring sw = swapped(*item.coloring);
      auto cl = canonical_labelling(item.geometry, &sw);
      if (found.count(cl.form)) continue;
      extra.push_back({item.geometry.permuted(cl.lab), permuted(sw, cl.lab), cl.form});
    }
    for (auto& e : extra) found.emplace(e.form, std::move(e));
  }
  for (auto& [form, item] : found) result.items.push_back(std::move(item));
  return result;
}

// Number of coloured classes when a colouring and its swap are identified.
inline std::size_t count_up_to_swap(const Enumeration& e) {
  std::set<CanonicalForm> forms;
  for (const auto& item : e.items)
    forms.insert(item.coloring ? canonical_form_up_to_swap(item.geometry, *item.coloring) : item.form);
  return forms.size();
}

// Distinct uncoloured geometries among the results, sorted by form.
inline std::vector<EnumeratedGeometry> underlying_geometries(const Enumeration& e) {
  std::map<CanonicalForm, EnumeratedGeometry> out;
  for (const auto& item : e.items) {
    auto cl = canonical_labelling(item.geometry);
    if (!out.count(cl.form)) out.emplace(cl.form, EnumeratedGeometry{item.geometry.permuted(cl.lab), std::nullopt, cl.form});
  }
  std::vector<EnumeratedGeometry> v;
  for (auto& [f, item] : out) v.push_back(std::move(item));
  return v;
}

namespace detail {

// Point map a -> b preserving every collinear triple and every line size,
// found by trying all injections with early rejection.
inline bool brute_isomorphic(const Geometry& a, const Geometry& b) {
  const int n = a.n_points();
  if (n != b.n_points() || a.n_lines() != b.n_lines()) return false;
  auto size_of = [](const Geometry& g, int x, int y) {
    int li = g.line_index(x, y);
    return li < 0 ? 2 : int(g.lines()[li].size());
  };
  auto same_line = [](const Geometry& g, int x, int y, int z) {
    int li = g.line_index(x, y);
    return li >= 0 && li == g.line_index(x, z);
  };
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      bool ok = true;
      for (int u = 0; u < i && ok; ++u) {
        if (size_of(a, u, i) != size_of(b, img[u], j)) ok = false;
        for (int v = u + 1; v < i && ok; ++v)
          if (same_line(a, u, v, i) != same_line(b, img[u], img[v], j)) ok = false;
      }
      if (!ok) continue;
      img[i] = j;
      used[j] = 1;
      if (self(self, i + 1)) return true;
      used[j] = 0;
    }
    img[i] = -1;
    return false;
  };
  return rec(rec, 0);
}

}  // namespace detail

// Reference enumeration without symmetry breaking or canonical forms: every
// labelled non-collinear linear space with lines of at least
// `min_line_size` points, reduced to one per class by direct isomorphism
// search.
inline std::vector<Geometry> brute_enumerate(int n_points, int min_line_size) {
  if (n_points > 9) throw UnsupportedSize("reference enumeration is limited to 9 points");
  if (n_points < 1 || min_line_size < 2) throw InvalidArguments("bad reference enumeration parameters");
  const int n = n_points, k = min_line_size, long_min = std::max(3, k);
  std::vector<std::vector<char>> unc(n, std::vector<char>(n, 1));
  std::vector<Line> lines;
  std::vector<Geometry> reps;
  auto add_leaf = [&] {
    Geometry g(n, lines);
    if (g.is_collinear()) return;
    for (const auto& r : reps)
      if (detail::brute_isomorphic(g, r)) return;
    reps.push_back(std::move(g));
  };
  auto rec = [&](auto&& self) -> void {
    int a = -1, b = -1;
    for (int x = 0; x < n && a < 0; ++x)
      for (int y = x + 1; y < n; ++y)
        if (unc[x][y]) {
          a = x;
          b = y;
          break;
        }
    if (a < 0) return add_leaf();
    if (k <= 2) {
      unc[a][b] = unc[b][a] = 0;
      self(self);
      unc[a][b] = unc[b][a] = 1;
    }
    // every set of further points pairwise uncovered with a, b and each other
    std::vector<int> cand;
    for (int z = 0; z < n; ++z)
      if (z != a && z != b && unc[a][z] && unc[b][z]) cand.push_back(z);
    const int m = int(cand.size());
    for (long mask = 1; mask < (1L << m); ++mask) {
      Line l{a, b};
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) l.push_back(cand[i]);
      if (int(l.size()) < long_min) continue;
      bool clique = true;
      for (std::size_t i = 2; i < l.size() && clique; ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
          if (!unc[l[i]][l[j]]) clique = false;
      if (!clique) continue;
      for (int x : l)
        for (int y : l) unc[x][y] = 0;
      lines.push_back(l);
      self(self);
      lines.pop_back();
      for (int x : l)
        for (int y : l)
          if (x != y) unc[x][y] = 1;
    }
  };
  rec(rec);
  std::sort(reps.begin(), reps.end(), [](const Geometry& x, const Geometry& y) { return x.lines() < y.lines(); });
  return reps;
}

}  // namespace sylgal
