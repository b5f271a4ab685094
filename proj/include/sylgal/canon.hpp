#pragma once

// Canonical forms, isomorphism and automorphism counting for (coloured)
// geometries. Works on the bipartite point/line incidence graph with
// individualization-refinement: vertex colours are cell start positions, so a
// discrete partition is directly a labelling and singletons keep their value.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sylgal/coloring.hpp"
#include "sylgal/error.hpp"
#include "sylgal/geometry.hpp"

namespace sylgal {

using BigCount = boost::multiprecision::cpp_int;
using CanonicalForm = std::string;

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

class CanonEngine {
public:
  using Perm = std::vector<int>;  // on points

  CanonEngine(const Geometry& g, const Coloring* c) : g_(g), c_(c) {
    n_ = g.n_points();
    V_ = n_ + int(g.n_lines());
    adj_.assign(V_, {});
    for (int li = 0; li < int(g.n_lines()); ++li)
      for (Point p : g.lines()[li]) {
        adj_[p].push_back(n_ + li);
        adj_[n_ + li].push_back(p);
      }
    // Initial partition: points by colour value, then all lines.
    root_.assign(V_, 0);
    if (c_) {
      if (int(c_->size()) != n_) throw InvalidArguments("colouring does not cover the geometry");
      int counts[4] = {0, 0, 0, 0};
      for (Colour x : *c_) ++counts[int(x)];
      int start[4] = {0, 0, 0, 0};
      for (int v = 1; v < 4; ++v) start[v] = start[v - 1] + counts[v - 1];
      for (int p = 0; p < n_; ++p) root_[p] = start[int((*c_)[p])];
    }
    for (int v = n_; v < V_; ++v) root_[v] = n_;
    root_inv_ = refine(root_);
    scratch_h_.resize(V_);
    scratch_order_.resize(V_);
  }

  struct Leaf {
    std::vector<std::uint64_t> inv;
    std::vector<int> path;
    std::vector<int> lab;  // point -> canonical position
    std::string form;
  };

  // Canonical leaf: maximal (invariant sequence, form) over the search tree.
  Leaf canonical() {
    gens_.clear();
    have_best_ = false;
    best_version_ = 0;
    std::vector<std::uint64_t> inv{root_inv_};
    std::vector<int> path;
    search(root_, 0, inv, path, /*greater=*/false);
    return best_;
  }

  // Order of the automorphism group via the stabilizer chain along the
  // first path of the search tree.
  BigCount group_order() {
    gens_.clear();
    std::vector<std::vector<int>> nodes{root_};
    std::vector<std::uint64_t> inv{root_inv_};
    std::vector<int> path;
    while (true) {
      int cell = target_cell(nodes.back());
      if (cell < 0) break;
      int v = cell_members(nodes.back(), cell).front();
      path.push_back(v);
      auto next = individualize(nodes.back(), v);
      inv.push_back(refine(next));
      nodes.push_back(std::move(next));
    }
    first_.inv = inv;
    first_.path = path;
    first_.lab = labelling(nodes.back());
    first_.form = form_of(first_.lab);
    BigCount order = 1;
    for (int level = int(path.size()) - 1; level >= 0; --level) {
      const auto& node = nodes[level];
      auto cell = cell_members(node, target_cell(node));
      std::vector<int> prefix(path.begin(), path.begin() + level);
      const int v = path[level];
      for (int w : cell) {
        if (w == v) continue;
        auto uf = orbits(prefix);
        if (find(uf, w) == find(uf, v)) continue;
        auto child = individualize(node, w);
        std::uint64_t ci = refine(child);
        if (ci != first_.inv[level + 1]) continue;
        std::vector<int> sub_prefix = prefix;
        sub_prefix.push_back(w);
        if (auto gamma = find_equivalent(child, level + 1, sub_prefix)) gens_.push_back(std::move(*gamma));
      }
      auto uf = orbits(prefix);
      long orbit = 0;
      for (int w : cell)
        if (find(uf, w) == find(uf, v)) ++orbit;
      order *= orbit;
    }
    return order;
  }

  const std::vector<Perm>& generators() const { return gens_; }

private:
  // Cell start of each target: first non-singleton cell among points, or -1.
  int target_cell(const std::vector<int>& col) const {
    std::vector<int> size(V_, 0);
    for (int p = 0; p < n_; ++p) ++size[col[p]];
    for (int s = 0; s < n_; ++s)
      if (size[s] > 1) return s;
    return -1;
  }

  std::vector<int> cell_members(const std::vector<int>& col, int start) const {
    std::vector<int> out;
    for (int p = 0; p < n_; ++p)
      if (col[p] == start) out.push_back(p);
    return out;
  }

  std::vector<int> individualize(const std::vector<int>& col, int v) const {
    std::vector<int> out(col);
    const int s = col[v];
    for (int u = 0; u < V_; ++u)
      if (col[u] == s && u != v) out[u] = s + 1;
    return out;
  }

  // Iterated 1-dimensional refinement; returns a label-invariant hash of the
  // stable partition.
  std::uint64_t refine(std::vector<int>& col) {
    std::vector<std::uint64_t>& h = scratch_h_;
    std::vector<int>& order = scratch_order_;
    h.resize(V_);
    order.resize(V_);
    std::vector<int> tmp;
    int cells = count_cells(col);
    std::uint64_t inv = 0;
    while (true) {
      for (int v = 0; v < V_; ++v) {
        tmp.clear();
        for (int u : adj_[v]) tmp.push_back(col[u]);
        std::sort(tmp.begin(), tmp.end());
        std::uint64_t x = 0x12345;
        for (int t : tmp) x = mix(x, std::uint64_t(t));
        h[v] = x;
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (col[a] != col[b]) return col[a] < col[b];
        return h[a] < h[b];
      });
      std::vector<int> next(V_);
      int new_cells = 0;
      inv = mix(0, std::uint64_t(V_));
      for (int i = 0; i < V_;) {
        int j = i;
        while (j < V_ && col[order[j]] == col[order[i]] && h[order[j]] == h[order[i]]) ++j;
        for (int k = i; k < j; ++k) next[order[k]] = i;
        inv = mix(inv, std::uint64_t(i));
        inv = mix(inv, std::uint64_t(j - i));
        inv = mix(inv, h[order[i]]);
        ++new_cells;
        i = j;
      }
      col.swap(next);
      if (new_cells == cells) break;
      cells = new_cells;
    }
    return mix(inv, std::uint64_t(cells));
  }

  int count_cells(const std::vector<int>& col) const {
    std::vector<char> seen(V_, 0);
    int c = 0;
    for (int v = 0; v < V_; ++v)
      if (!seen[col[v]]) {
        seen[col[v]] = 1;
        ++c;
      }
    return c;
  }

  std::vector<int> labelling(const std::vector<int>& col) const { return std::vector<int>(col.begin(), col.begin() + n_); }

  std::string form_of(const std::vector<int>& lab) const {
    std::vector<std::vector<int>> lines;
    lines.reserve(g_.n_lines());
    for (const auto& l : g_.lines()) {
      std::vector<int> m;
      m.reserve(l.size());
      for (Point p : l) m.push_back(lab[p]);
      std::sort(m.begin(), m.end());
      lines.push_back(std::move(m));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    auto put = [&](int v) {
      out.push_back(char((v >> 8) & 0xff));
      out.push_back(char(v & 0xff));
    };
    put(n_);
    put(int(lines.size()));
    for (const auto& l : lines) {
      put(int(l.size()));
      for (int p : l) put(p);
    }
    if (c_) {
      out.push_back(char(1));
      std::vector<char> cols(n_);
      for (int p = 0; p < n_; ++p) cols[lab[p]] = char((*c_)[p]);
      out.append(cols.begin(), cols.end());
    } else {
      out.push_back(char(0));
    }
    return out;
  }

  // gamma(p) = position-matching map from leaf a to leaf b.
  Perm leaf_map(const std::vector<int>& lab_a, const std::vector<int>& lab_b) const {
    std::vector<int> inv_b(n_);
    for (int p = 0; p < n_; ++p) inv_b[lab_b[p]] = p;
    Perm gamma(n_);
    for (int p = 0; p < n_; ++p) gamma[p] = inv_b[lab_a[p]];
    return gamma;
  }

  static int find(std::vector<int>& uf, int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }

  // Orbits on points of the group generated by the known generators that fix
  // `prefix` pointwise.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> uf(n_);
    std::iota(uf.begin(), uf.end(), 0);
    for (const auto& gamma : gens_) {
      bool fixes = true;
      for (int v : prefix)
        if (gamma[v] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int p = 0; p < n_; ++p) {
        int a = find(uf, p), b = find(uf, gamma[p]);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
      }
    }
    return uf;
  }

  // Looks for a leaf below `col` equivalent to first_. Returns the
  // automorphism mapping the first leaf to it.
  std::optional<Perm> find_equivalent(std::vector<int>& col, int level, std::vector<int>& prefix) {
    int cell = target_cell(col);
    if (cell < 0) {
      auto lab = labelling(col);
      if (form_of(lab) == first_.form) return leaf_map(first_.lab, lab);
      return std::nullopt;
    }
    if (level >= int(first_.inv.size())) return std::nullopt;
    std::vector<int> failed;
    for (int x : cell_members(col, cell)) {
      if (!failed.empty()) {
        auto uf = orbits(prefix);
        bool skip = false;
        for (int y : failed)
          if (find(uf, x) == find(uf, y)) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      auto child = individualize(col, x);
      std::uint64_t ci = refine(child);
      if (level + 1 >= int(first_.inv.size()) || ci != first_.inv[level + 1]) {
        failed.push_back(x);
        continue;
      }
      prefix.push_back(x);
      auto r = find_equivalent(child, level + 1, prefix);
      prefix.pop_back();
      if (r) return r;
      failed.push_back(x);
    }
    return std::nullopt;
  }

  // Returns the level to abort back to, or -1.
  int search(std::vector<int>& col, int level, std::vector<std::uint64_t>& inv, std::vector<int>& path, bool greater) {
    int cell = target_cell(col);
    if (cell < 0) {
      auto lab = labelling(col);
      auto form = form_of(lab);
      if (!have_best_ || greater || form > best_.form) {
        best_ = Leaf{inv, path, std::move(lab), std::move(form)};
        have_best_ = true;
        ++best_version_;
        return -1;
      }
      if (form == best_.form) {
        gens_.push_back(leaf_map(best_.lab, lab));
        std::size_t d = 0;
        while (d < path.size() && d < best_.path.size() && path[d] == best_.path[d]) ++d;
        return int(d);
      }
      return -1;
    }
    std::vector<int> explored;
    auto members = cell_members(col, cell);
    std::size_t gens_seen = gens_.size();
    std::vector<int> uf = orbits(path);
    for (int x : members) {
      if (gens_.size() != gens_seen) {
        uf = orbits(path);
        gens_seen = gens_.size();
      }
      bool skip = false;
      for (int y : explored)
        if (find(uf, x) == find(uf, y)) {
          skip = true;
          break;
        }
      if (skip) continue;
      explored.push_back(x);
      auto child = individualize(col, x);
      std::uint64_t ci = refine(child);
      bool child_greater = greater;
      if (have_best_ && !greater) {
        const std::size_t d = std::size_t(level) + 1;
        if (d >= best_.inv.size()) {
          child_greater = true;
        } else if (ci < best_.inv[d]) {
          continue;
        } else if (ci > best_.inv[d]) {
          child_greater = true;
        }
      }
      inv.push_back(ci);
      path.push_back(x);
      std::uint64_t version = best_version_;
      int r = search(child, level + 1, inv, path, child_greater);
      path.pop_back();
      inv.pop_back();
      if (best_version_ != version) greater = false;
      if (r >= 0 && r < level) return r;
    }
    return -1;
  }

  const Geometry& g_;
  const Coloring* c_;
  int n_ = 0, V_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<int> root_;
  std::uint64_t root_inv_ = 0;
  std::vector<Perm> gens_;
  Leaf best_, first_;
  bool have_best_ = false;
  std::uint64_t best_version_ = 0;
  std::vector<std::uint64_t> scratch_h_;
  std::vector<int> scratch_order_;
};

}  // namespace detail

struct CanonicalLabelling {
  CanonicalForm form;
  std::vector<int> lab;  // point -> canonical position
};

inline CanonicalLabelling canonical_labelling(const Geometry& g, const Coloring* c = nullptr) {
  require_valid(g);
  detail::CanonEngine engine(g, c);
  auto leaf = engine.canonical();
  return {std::move(leaf.form), std::move(leaf.lab)};
}

inline CanonicalForm canonical_form(const Geometry& g) { return canonical_labelling(g).form; }
inline CanonicalForm canonical_form(const Geometry& g, const Coloring& c) { return canonical_labelling(g, &c).form; }

// Form that also identifies a colouring with its red/blue swap.
inline CanonicalForm canonical_form_up_to_swap(const Geometry& g, const Coloring& c) {
  auto a = canonical_form(g, c);
  auto b = canonical_form(g, swapped(c));
  return std::min(a, b);
}

inline std::string to_hex(const CanonicalForm& f) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(f.size() * 2);
  for (unsigned char ch : f) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 15]);
  }
  return out;
}

// A colour-preserving isomorphism g1 -> g2 as a point map, if one exists.
inline std::optional<std::vector<int>> are_isomorphic(const Geometry& g1, const Coloring* c1, const Geometry& g2,
                                                      const Coloring* c2) {
  if (g1.n_points() != g2.n_points() || g1.n_lines() != g2.n_lines()) return std::nullopt;
  if ((c1 == nullptr) != (c2 == nullptr)) return std::nullopt;
  auto a = canonical_labelling(g1, c1);
  auto b = canonical_labelling(g2, c2);
  if (a.form != b.form) return std::nullopt;
  const int n = g1.n_points();
  std::vector<int> inv_b(n);
  for (int p = 0; p < n; ++p) inv_b[b.lab[p]] = p;
  std::vector<int> sigma(n);
  for (int p = 0; p < n; ++p) sigma[p] = inv_b[a.lab[p]];
  return sigma;
}

inline std::optional<std::vector<int>> are_isomorphic(const Geometry& g1, const Geometry& g2) {
  return are_isomorphic(g1, nullptr, g2, nullptr);
}

inline BigCount automorphism_group_order(const Geometry& g, const Coloring* c = nullptr) {
  require_valid(g);
  if (g.n_points() > 64) throw UnsupportedSize("automorphism counting is limited to 64 points");
  detail::CanonEngine engine(g, c);
  return engine.group_order();
}

}  // namespace sylgal
