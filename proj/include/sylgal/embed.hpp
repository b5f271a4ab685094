#pragma once

// Embeddings of abstract geometries into PG(n,q): search, verification and
// the smallest-size function f_{k,n}(p) with the provenance of each bound.

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sylgal/canon.hpp"
#include "sylgal/constructions.hpp"
#include "sylgal/enumerate.hpp"
#include "sylgal/error.hpp"
#include "sylgal/galois.hpp"
#include "sylgal/geometry.hpp"
#include "sylgal/parallel.hpp"

namespace sylgal {

struct Embedding {
  int dim = 2;
  FiniteField field;
  std::vector<ProjPoint> images;  // point index -> image

  int span_dimension() const { return coordinate_rank(images) - 1; }
};

struct EmbedOptions {
  bool full_span = false;  // image must span the whole space
};

namespace detail {

inline bool abstract_collinear(const Geometry& g, Point a, Point b, Point c) {
  int li = g.line_index(a, b);
  return li >= 0 && li == g.line_index(a, c);
}

// Points go in a fixed order, each next point being the one most tied to
// the points already placed. Images are normalized: the first point outside
// the current span is the next unit vector, and a point inside the span is
// scaled by the diagonal maps that fix every earlier image, which makes one
// coordinate per newly joined block of coordinates equal to 1. While every
// image has prime-field coordinates, candidates are taken up to Frobenius.
class EmbedSearch {
public:
  EmbedSearch(const Geometry& g, const ProjectiveSpace& ps, bool full_span)
      : g_(g), ps_(ps), n_(ps.dim()), full_span_(full_span), img_(g.n_points(), -1), used_(ps.n_points(), 0) {
    build_order();
    const FiniteField& f = ps.field();
    frob_.resize(ps.n_points());
    prime_.resize(ps.n_points());
    for (int i = 0; i < ps.n_points(); ++i) {
      std::vector<FieldElem> w;
      bool prime = true;
      for (auto e : ps.coords(i)) {
        w.push_back(f.frobenius(e));
        prime = prime && f.in_prime_subfield(e);
      }
      frob_[i] = ps.index_of(w);
      prime_[i] = prime;
    }
    comp_.assign(n_ + 1, -1);
    span_points_.resize(n_ + 1);
    for (int i = 0; i < ps.n_points(); ++i) {
      const auto& c = ps.coords(i);
      int last = n_;
      while (last > 0 && c[last].code == 0) --last;
      for (int d = last; d <= n_; ++d) span_points_[d].push_back(i);
    }
  }

  std::optional<std::vector<int>> run() {
    if (rec(0)) return img_;
    return std::nullopt;
  }

  // Every normalized solution, up to `limit` of them.
  std::vector<std::vector<int>> run_all(std::size_t limit) {
    collect_ = true;
    limit_ = limit;
    rec(0);
    return std::move(found_);
  }

private:
  void build_order() {
    const int n = g_.n_points();
    std::vector<char> placed(n, 0);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      long best_score = -1;
      for (Point v = 0; v < n; ++v) {
        if (placed[v]) continue;
        long forced = 0, ties = 0;
        for (int li : g_.lines_through(v)) {
          int on = 0;
          for (Point u : g_.lines()[li]) on += placed[u];
          if (on >= 2) ++forced;
          ties += on;
        }
        long size_hint = 0;
        for (int li : g_.lines_through(v)) size_hint = std::max<long>(size_hint, long(g_.lines()[li].size()));
        long score = forced * 1000000 + ties * 1000 + size_hint;
        if (score > best_score) {
          best = v;
          best_score = score;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
    }
  }

  int find(int x) { return comp_[x] == x ? x : comp_[x] = find(comp_[x]); }

  bool consistent(int step, Point v, int c) const {
    if (used_[c]) return false;
    for (int i = 0; i < step; ++i) {
      Point u = order_[i];
      for (int j = i + 1; j < step; ++j) {
        Point w = order_[j];
        if (abstract_collinear(g_, u, w, v) != ps_.collinear(img_[u], img_[w], c)) return false;
      }
    }
    return true;
  }

  // Coordinates of c on which the current diagonal freedom is spent.
  bool normalized(int c) {
    const auto& x = ps_.coords(c);
    int lead = -1;
    std::vector<int> seen;
    for (int i = 0; i <= span_; ++i) {
      if (x[i].code == 0) continue;
      int r = find(i);
      if (lead < 0) {
        lead = r;
        seen.push_back(r);
        continue;
      }
      if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
      seen.push_back(r);
      if (x[i].code != 1) return false;  // first coordinate of a newly joined block
    }
    return true;
  }

  bool frobenius_least(int c) const {
    for (int y = frob_[c]; y != c; y = frob_[y])
      if (y < c) return false;
    return true;
  }

  bool rec(int step) {
    const int n = g_.n_points();
    if (step == n) {
      if (full_span_ && span_ != n_) return false;
      if (!collect_) return true;
      found_.push_back(img_);
      return found_.size() >= limit_;
    }
    if (full_span_ && n_ - span_ > n - step) return false;
    const Point v = order_[step];

    // the PG line forced by two placed points on a common line with v
    int forced_line = -1;
    for (int li : g_.lines_through(v)) {
      Point a = -1, b = -1;
      for (Point u : g_.lines()[li])
        if (u != v && img_[u] >= 0) {
          if (a < 0) a = u;
          else if (b < 0) b = u;
        }
      if (b >= 0) {
        forced_line = ps_.line_index(img_[a], img_[b]);
        break;
      }
    }

    bool all_prime = true;
    for (int i = 0; i < step && all_prime; ++i) all_prime = prime_[img_[order_[i]]];

    auto attempt = [&](int c, bool new_axis) -> bool {
      if (!consistent(step, v, c)) return false;
      std::vector<int> saved = comp_;
      const int saved_span = span_;
      if (new_axis) {
        ++span_;
        comp_[span_] = span_;
      } else {
        int lead = -1;
        const auto& x = ps_.coords(c);
        for (int i = 0; i <= span_; ++i)
          if (x[i].code != 0) {
            if (lead < 0) lead = find(i);
            else comp_[find(i)] = lead;
          }
      }
      img_[v] = c;
      used_[c] = 1;
      if (rec(step + 1)) return true;
      used_[c] = 0;
      img_[v] = -1;
      comp_ = std::move(saved);
      span_ = saved_span;
      return false;
    };

    const std::vector<int>* pool = nullptr;
    if (forced_line >= 0) pool = &ps_.lines()[forced_line];
    else if (span_ >= 0) pool = &span_points_[span_];
    if (pool)
      for (int c : *pool) {
        if (used_[c] || !normalized(c)) continue;
        if (all_prime && !prime_[c] && !frobenius_least(c)) continue;
        if (attempt(c, false)) return true;
      }
    if (forced_line < 0 && span_ < n_) {
      // next unit vector
      std::vector<FieldElem> e(n_ + 1, ps_.field().zero());
      e[span_ + 1] = ps_.field().one();
      if (attempt(ps_.index_of(e), true)) return true;
    }
    return false;
  }

  const Geometry& g_;
  const ProjectiveSpace& ps_;
  int n_;
  bool full_span_;
  std::vector<int> order_;
  std::vector<int> img_;
  std::vector<char> used_;
  std::vector<int> frob_;
  std::vector<char> prime_;
  std::vector<int> comp_;  // union-find over coordinate positions in the span
  int span_ = -1;          // images lie in the span of the first span_+1 unit vectors
  std::vector<std::vector<int>> span_points_;
  bool collect_ = false;
  std::size_t limit_ = 0;
  std::vector<std::vector<int>> found_;
};

}  // namespace detail

// True iff the assignment is injective and maps collinear triples to
// collinear triples and non-collinear triples to non-collinear triples.
inline bool verify_embedding(const Geometry& g, const Embedding& e) {
  const int n = g.n_points();
  if (int(e.images.size()) != n) return false;
  for (const auto& p : e.images)
    if (p.dim() != e.dim || !(p.field == e.field)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (e.images[a] == e.images[b]) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (detail::abstract_collinear(g, a, b, c) != collinear({e.images[a], e.images[b], e.images[c]})) return false;
  return true;
}

namespace detail {

// No dimension precondition: a geometry of larger abstract dimension can
// still have a planar image.
inline std::optional<Embedding> embed_search(const Geometry& g, const ProjectiveSpace& ps, bool full_span) {
  if (g.n_points() > ps.n_points()) return std::nullopt;
  EmbedSearch search(g, ps, full_span);
  auto img = search.run();
  if (!img) return std::nullopt;
  Embedding e{ps.dim(), ps.field(), {}};
  for (int c : *img) e.images.push_back(ps.point(c));
  return e;
}

}  // namespace detail

inline std::optional<Embedding> embeds_into(const Geometry& g, const ProjectiveSpace& ps, const EmbedOptions& opts = {}) {
  require_valid(g);
  if (dimension(g) > ps.dim()) throw UnsupportedDimension("geometry has larger dimension than the target space");
  return detail::embed_search(g, ps, opts.full_span);
}

// Every embedding in normal form: the first point leaving the current span
// is the next unit vector, and diagonal and field-automorphism freedom is
// spent as in the decision search. Stops after `limit` results.
inline std::vector<Embedding> all_embeddings(const Geometry& g, const ProjectiveSpace& ps, std::size_t limit = 1000,
                                             const EmbedOptions& opts = {}) {
  require_valid(g);
  if (dimension(g) > ps.dim()) throw UnsupportedDimension("geometry has larger dimension than the target space");
  std::vector<Embedding> out;
  if (g.n_points() > ps.n_points() || limit == 0) return out;
  detail::EmbedSearch search(g, ps, opts.full_span);
  for (const auto& img : search.run_all(limit)) {
    Embedding e{ps.dim(), ps.field(), {}};
    for (int c : img) e.images.push_back(ps.point(c));
    out.push_back(std::move(e));
  }
  return out;
}

inline std::optional<Embedding> embeds_into(const Geometry& g, int n, const FiniteField& f, const EmbedOptions& opts = {}) {
  if (n < 1) throw InvalidArguments("target dimension must be at least 1");
  require_valid(g);
  if (dimension(g) > n) throw UnsupportedDimension("geometry has dimension " + std::to_string(dimension(g)) + " > " + std::to_string(n));
  ProjectiveSpace ps(n, f);
  return embeds_into(g, ps, opts);
}

// ---- smallest n-dimensional k-SG configurations in characteristic p ----

struct FminOptions {
  double budget_seconds = 0;  // total enumeration time; 0 means unlimited
  int enumeration_cap = 0;    // largest size enumerated; 0 means no cap
  int workers = 0;
  long max_target_points = 4096;  // larger projective spaces are skipped
};

struct FminResult {
  int k = 3, n = 2, p = 2, horizon = 1, size_cap = 0;
  long lower = 0;
  std::string lower_provenance;  // "exhaustive" or "cited-theorem"
  std::optional<long> upper;
  std::string witness_name;
  std::optional<Geometry> witness_geometry;
  std::optional<Embedding> witness;
  bool resolved = false;
  // some smaller candidate was refuted only over GF(p^j) for j <= horizon
  bool horizon_limited = false;
  int exhausted_through = 0;  // every size up to this one was fully enumerated
  std::vector<std::string> notes;
};

// Published values and lower bounds for f_{3,2}, f_{3,3} and f_{4,2}.
inline std::optional<long> cited_lower_bound(int k, int n, int p) {
  if (k == 3 && n == 2) return p == 2 ? 7 : 9;
  if (k == 3 && n == 3) return p == 2 ? 15 : p == 3 ? 27 : 51;
  if (k == 4 && n == 2) return p == 2 ? 16 : p == 3 ? 13 : 20;
  return std::nullopt;
}

// Known configurations tried as upper-bound witnesses, by size then name.
inline const std::vector<NamedConfig>& witness_catalogue() {
  static const std::vector<NamedConfig> cat = [] {
    std::vector<NamedConfig> c;
    for (long q : {2, 3, 4, 5}) c.push_back(projective_space_config(2, q));
    c.push_back(projective_space_config(3, 2));
    c.push_back(projective_space_config(3, 3));
    for (long q : {3, 4, 5, 7}) c.push_back(affine_space_config(2, q));
    c.push_back(affine_space_config(3, 3));
    for (int p : {3, 5, 7})
      for (int m : {3, 4})
        if (m <= p) c.push_back(parallel_lines_config(p, m));
    for (int p : {3, 5}) c.push_back(parallel_planes_config(p));
    for (const auto& name : table4_names()) c.push_back(table4_deletion(name));
    c.push_back(ag_plus(3));
    std::stable_sort(c.begin(), c.end(), [](const NamedConfig& a, const NamedConfig& b) {
      if (a.geometry.n_points() != b.geometry.n_points()) return a.geometry.n_points() < b.geometry.n_points();
      return a.name < b.name;
    });
    return c;
  }();
  return cat;
}

inline FminResult fmin(int k, int n, int p, int horizon, int size_cap, const FminOptions& opts = {}) {
  if (k < 3) throw InvalidArguments("fmin needs k >= 3");
  if (n < 2) throw InvalidArguments("fmin needs dimension >= 2");
  if (!is_prime(p)) throw InvalidArguments(std::to_string(p) + " is not prime");
  if (horizon < 1) throw InvalidArguments("horizon must be >= 1");
  if (size_cap < 3) throw InvalidArguments("size cap must be >= 3");

  FminResult r;
  r.k = k;
  r.n = n;
  r.p = p;
  r.horizon = horizon;
  r.size_cap = size_cap;

  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  auto remaining = [&]() -> double {
    if (opts.budget_seconds <= 0) return 0;
    return opts.budget_seconds - std::chrono::duration<double>(clock::now() - start).count();
  };

  std::vector<std::optional<ProjectiveSpace>> spaces(horizon + 1);
  std::vector<char> space_skipped(horizon + 1, 0);
  auto space = [&](int j) -> const ProjectiveSpace* {
    if (space_skipped[j]) return nullptr;
    if (!spaces[j]) {
      long q = 1;
      for (int i = 0; i < j; ++i) q *= p;
      long pts = 0, pw = 1;
      for (int i = 0; i <= n; ++i, pw *= q) pts += pw;
      if (pts > opts.max_target_points || q > (1L << 16)) {
        space_skipped[j] = 1;
        r.notes.push_back("PG(" + std::to_string(n) + "," + std::to_string(q) + ") skipped: " + std::to_string(pts) +
                          " points");
        return nullptr;
      }
      spaces[j].emplace(n, field_make(p, j));
    }
    return &*spaces[j];
  };

  // Try one candidate over GF(p^j), j <= horizon. Returns true on success.
  int smallest_refuted = 0;
  auto try_candidate = [&](const std::string& name, const Geometry& g) {
    if (!is_k_sg(g, k) || dimension(g) < n) return false;
    for (int j = 1; j <= horizon; ++j) {
      const ProjectiveSpace* ps = space(j);
      if (!ps) continue;
      if (auto e = detail::embed_search(g, *ps, true)) {
        if (!verify_embedding(g, *e) || e->span_dimension() != n) throw GeometryAnomaly("embedding failed verification");
        r.upper = g.n_points();
        r.witness_name = name;
        r.witness_geometry = g;
        r.witness = std::move(*e);
        return true;
      }
    }
    if (!smallest_refuted) smallest_refuted = g.n_points();
    return false;
  };

  bool enumerating = true;
  int exhausted = 2;
  for (int size = 3; size <= size_cap && !r.upper; ++size) {
    for (const auto& c : witness_catalogue())
      if (c.geometry.n_points() == size && try_candidate(c.name, c.geometry)) break;
    if (r.upper) break;
    if (!enumerating) continue;
    if (opts.enumeration_cap > 0 && size > opts.enumeration_cap) {
      enumerating = false;
      r.notes.push_back("enumeration capped at size " + std::to_string(opts.enumeration_cap));
      continue;
    }
    double left = remaining();
    if (opts.budget_seconds > 0 && left <= 0) {
      enumerating = false;
      r.notes.push_back("enumeration budget spent before size " + std::to_string(size));
      continue;
    }
    EnumSpec spec;
    spec.n_points = size;
    spec.min_line_size = k;
    EnumOptions eo;
    eo.budget_seconds = left;
    eo.workers = opts.workers;
    try {
      auto e = enumerate(spec, eo);
      for (const auto& item : e.items) {
        if (try_candidate("enumerated " + std::to_string(size) + "-point class", item.geometry)) break;
      }
      if (!r.upper) exhausted = size;
    } catch (const PartialResult& pr) {
      enumerating = false;
      r.notes.push_back("enumeration at size " + std::to_string(size) + " stopped: " + pr.what());
    } catch (const UnsupportedSize& us) {
      enumerating = false;
      r.notes.push_back(std::string("enumeration at size ") + std::to_string(size) + " unsupported: " + us.what());
    }
  }

  r.exhausted_through = exhausted;
  r.lower = exhausted + 1;
  r.lower_provenance = "exhaustive";
  if (auto cited = cited_lower_bound(k, n, p); cited && *cited > r.lower) {
    r.lower = *cited;
    r.lower_provenance = "cited-theorem";
  }
  if (r.upper && r.lower > *r.upper) throw GeometryAnomaly("lower bound exceeds a verified witness");
  r.resolved = r.upper && r.lower == *r.upper;
  r.horizon_limited = r.lower_provenance == "exhaustive" && smallest_refuted && smallest_refuted < r.lower;
  return r;
}

}  // namespace sylgal
