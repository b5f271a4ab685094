#pragma once

// Arithmetic in GF(p^k) and coordinate models of PG(n,q) and AG(n,q).
//
// Elements are stored as integer codes c0 + c1*p + ... + c_{k-1}*p^{k-1},
// i.e. the coefficient vector of a polynomial in x reduced modulo the field's
// modulus. The prime subfield is exactly the codes 0..p-1.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "sylgal/error.hpp"
#include "sylgal/geometry.hpp"

namespace sylgal {

struct FieldElem {
  std::uint32_t code = 0;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

inline bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

namespace detail {

using Poly = std::vector<int>;  // low degree first, trailing zeros trimmed

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = int(m.size()) - 1;
  // m is monic
  while (int(a.size()) - 1 >= dm) {
    int shift = int(a.size()) - 1 - dm;
    int lead = a.back();
    for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d from an integer in [0, p^d).
inline Poly monic_from_code(long code, int d, int p) {
  Poly f(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[i] = int(code % p);
    code /= p;
  }
  f[d] = 1;
  return f;
}

inline bool irreducible(const Poly& f, int p) {
  const int deg = int(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long c = 0; c < count; ++c)
      if (poly_mod(f, monic_from_code(c, d, p), p).empty()) return false;
  }
  return true;
}

}  // namespace detail

class FiniteField {
public:
  FiniteField() = default;

  // Deterministic modulus: the first irreducible monic polynomial of degree k
  // when the lower coefficients are read as a base-p integer c0 + c1 p + ....
  static FiniteField make(int p, int k) {
    if (!is_prime(p)) throw InvalidArguments("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw InvalidArguments("field extension degree must be >= 1");
    long q = 1;
    for (int i = 0; i < k; ++i) {
      q *= p;
      if (q > (1L << 16)) throw UnsupportedSize("fields are limited to q <= 2^16");
    }
    detail::Poly modulus;
    if (k == 1) {
      modulus = {0, 1};
    } else {
      for (long c = 0;; ++c) {
        auto f = detail::monic_from_code(c, k, p);
        if (detail::irreducible(f, p)) {
          modulus = f;
          break;
        }
      }
    }
    return FiniteField(p, k, std::move(modulus));
  }

  int characteristic() const { return t_->p; }
  int degree() const { return t_->k; }
  int size() const { return t_->q; }
  // Coefficients c0..ck of the monic modulus.
  const std::vector<int>& modulus() const { return t_->modulus; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem element(std::uint32_t code) const {
    if (code >= std::uint32_t(t_->q)) throw InvalidArguments("field element code out of range");
    return {code};
  }
  // Image of an integer in the prime subfield.
  FieldElem from_int(long v) const { return {std::uint32_t(((v % t_->p) + t_->p) % t_->p)}; }

  FieldElem add(FieldElem a, FieldElem b) const {
    if (!t_->add.empty()) return {t_->add[std::size_t(a.code) * t_->q + b.code]};
    return {digitwise(a.code, b.code, +1)};
  }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem neg(FieldElem a) const { return {t_->neg[a.code]}; }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a.code == 0 || b.code == 0) return {0};
    return {t_->exp[t_->log[a.code] + t_->log[b.code]]};
  }
  FieldElem inv(FieldElem a) const {
    if (a.code == 0) throw InvalidArguments("inverse of zero");
    return {t_->exp[(t_->q - 1 - t_->log[a.code]) % (t_->q - 1)]};
  }
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, long e) const {
    if (e == 0) return one();
    if (a.code == 0) return zero();
    long m = t_->q - 1;
    long idx = (long(t_->log[a.code]) * (e % m)) % m;
    if (idx < 0) idx += m;
    return {t_->exp[idx]};
  }
  FieldElem frobenius(FieldElem a) const { return pow(a, t_->p); }
  bool in_prime_subfield(FieldElem a) const { return a.code < std::uint32_t(t_->p); }

  // Multiplicative order of a non-zero element.
  long order(FieldElem a) const {
    if (a.code == 0) throw InvalidArguments("zero has no multiplicative order");
    long m = t_->q - 1;
    long l = t_->log[a.code];
    long g = std::gcd(m, l);
    return m / g;
  }

  FieldElem primitive() const { return {t_->exp[1]}; }

  std::vector<int> coefficients(FieldElem a) const {
    std::vector<int> c(t_->k);
    std::uint32_t v = a.code;
    for (int i = 0; i < t_->k; ++i) {
      c[i] = int(v % t_->p);
      v /= t_->p;
    }
    return c;
  }

  // "c0,c1,...,c_{k-1}"
  std::string format(FieldElem a) const {
    std::string s;
    auto c = coefficients(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    return s;
  }

  FieldElem parse(const std::string& text) const {
    std::vector<int> c;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) throw InvalidArguments("empty field coefficient in '" + text + "'");
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size() || v < 0 || v >= t_->p) throw InvalidArguments("bad field coefficient '" + part + "'");
      c.push_back(v);
    }
    if (int(c.size()) != t_->k) throw InvalidArguments("field element '" + text + "' needs " + std::to_string(t_->k) + " coefficients");
    std::uint32_t code = 0;
    for (int i = t_->k - 1; i >= 0; --i) code = code * t_->p + c[i];
    return {code};
  }

  std::string describe() const {
    std::string s = "field " + std::to_string(t_->p) + " " + std::to_string(t_->k) + " modulus=";
    for (std::size_t i = 0; i < t_->modulus.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(t_->modulus[i]);
    }
    return s;
  }

  std::vector<FieldElem> elements() const {
    std::vector<FieldElem> out(t_->q);
    for (int i = 0; i < t_->q; ++i) out[i] = {std::uint32_t(i)};
    return out;
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    if (a.t_ == b.t_) return true;
    if (!a.t_ || !b.t_) return false;
    return a.t_->p == b.t_->p && a.t_->k == b.t_->k && a.t_->modulus == b.t_->modulus;
  }

private:
  struct Tables {
    int p = 0, k = 0, q = 0;
    std::vector<int> modulus;
    std::vector<std::uint32_t> exp;  // length 2(q-1)
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> neg;
    std::vector<std::uint16_t> add;  // q*q table when q is small
  };

  FiniteField(int p, int k, detail::Poly modulus) {
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->k = k;
    t->q = 1;
    for (int i = 0; i < k; ++i) t->q *= p;
    t->modulus = modulus;
    const int q = t->q;
    t->neg.resize(q);
    t_ = t;
    for (int a = 0; a < q; ++a) t->neg[a] = digitwise(0, std::uint32_t(a), -1);
    if (q <= 1024) {
      t->add.resize(std::size_t(q) * q);
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) t->add[std::size_t(a) * q + b] = std::uint16_t(digitwise(a, b, +1));
    }
    // Find a primitive element by brute force over the polynomial product.
    auto mulpoly = [&](std::uint32_t a, std::uint32_t b) {
      detail::Poly pa(k, 0), pb(k, 0);
      for (int i = 0; i < k; ++i) {
        pa[i] = int(a % p);
        a /= p;
        pb[i] = int(b % p);
        b /= p;
      }
      detail::Poly prod(2 * k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      auto r = detail::poly_mod(prod, modulus, p);
      std::uint32_t code = 0;
      for (int i = int(r.size()) - 1; i >= 0; --i) code = code * p + r[i];
      return code;
    };
    t->exp.assign(std::size_t(2) * (q - 1) + 1, 0);
    t->log.assign(q, 0);
    for (std::uint32_t g = 1; g < std::uint32_t(q); ++g) {
      std::uint32_t x = 1;
      int ord = 0;
      do {
        x = mulpoly(x, g);
        ++ord;
      } while (x != 1);
      if (ord != q - 1 && q > 2) continue;
      x = 1;
      for (int i = 0; i < q - 1; ++i) {
        t->exp[i] = x;
        t->log[x] = std::uint32_t(i);
        x = mulpoly(x, g);
      }
      break;
    }
    for (int i = q - 1; i < 2 * (q - 1) + 1; ++i) t->exp[i] = t->exp[i - (q - 1)];
  }

  std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, int sign) const {
    const int p = t_->p;
    std::uint32_t out = 0, scale = 1;
    for (int i = 0; i < t_->k; ++i) {
      int da = int(a % p), db = int(b % p);
      a /= p;
      b /= p;
      out += std::uint32_t(((da + sign * db) % p + p) % p) * scale;
      scale *= p;
    }
    return out;
  }

  std::shared_ptr<const Tables> t_;
};

inline FiniteField field_make(int p, int k) { return FiniteField::make(p, k); }

// The field of order q (a prime power).
inline FiniteField field_of_order(long q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    long v = q;
    int k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    if (v != 1) break;
    return FiniteField::make(p, k);
  }
  throw InvalidArguments(std::to_string(q) + " is not a prime power");
}

// All elements of exact multiplicative order m, ascending by code.
inline std::vector<FieldElem> elements_of_order(const FiniteField& f, long m) {
  if (m < 1) throw InvalidArguments("order must be >= 1");
  std::vector<FieldElem> out;
  if ((f.size() - 1) % m != 0) return out;
  for (auto a : f.elements())
    if (a.code != 0 && f.order(a) == m) out.push_back(a);
  return out;
}

// Homogeneous coordinates normalized so the first non-zero entry is 1.
struct ProjPoint {
  FiniteField field;
  std::vector<FieldElem> coords;

  ProjPoint() = default;
  ProjPoint(FiniteField f, std::vector<FieldElem> c) : field(std::move(f)), coords(std::move(c)) { normalize(); }

  int dim() const { return int(coords.size()) - 1; }

  void normalize() {
    auto it = std::find_if(coords.begin(), coords.end(), [](FieldElem e) { return e.code != 0; });
    if (it == coords.end()) throw InvalidArguments("projective point with all-zero coordinates");
    if (it->code == 1) return;
    FieldElem s = field.inv(*it);
    for (auto& c : coords) c = field.mul(c, s);
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.field == b.field && a.coords == b.coords; }
};

namespace detail {

// Rank of a list of vectors over f (Gaussian elimination on a copy).
inline int rank(const FiniteField& f, std::vector<std::vector<FieldElem>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < int(rows.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < int(rows.size()); ++i)
      if (rows[i][c].code != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    FieldElem s = f.inv(rows[r][c]);
    for (auto& e : rows[r]) e = f.mul(e, s);
    for (int i = 0; i < int(rows.size()); ++i) {
      if (i == r || rows[i][c].code == 0) continue;
      FieldElem factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace detail

inline int coordinate_rank(const std::vector<ProjPoint>& pts) {
  if (pts.empty()) return 0;
  std::vector<std::vector<FieldElem>> rows;
  for (const auto& p : pts) {
    if (!(p.field == pts[0].field)) throw InvalidArguments("points over different fields");
    if (p.coords.size() != pts[0].coords.size()) throw InvalidArguments("points of different dimensions");
    rows.push_back(p.coords);
  }
  return detail::rank(pts[0].field, std::move(rows));
}

// Rank of the coordinate matrix is at most 2.
inline bool collinear(const std::vector<ProjPoint>& pts) {
  if (pts.size() < 2) throw InvalidArguments("collinearity needs at least two points");
  return coordinate_rank(pts) <= 2;
}

// Incidence structure induced on a point set: lines are the maximal subsets
// of size >= 3 that are collinear in the ambient space.
inline Geometry geometry_from_points(const std::vector<ProjPoint>& pts) {
  const int n = int(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i] == pts[j]) throw InvalidArguments("repeated point in coordinate table");
  std::vector<char> done(std::size_t(n) * n, 0);
  std::vector<Line> lines;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (done[std::size_t(a) * n + b]) continue;
      Line l{a, b};
      for (int c = b + 1; c < n; ++c)
        if (coordinate_rank({pts[a], pts[b], pts[c]}) <= 2) l.push_back(c);
      for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) done[std::size_t(l[i]) * n + l[j]] = 1;
      if (l.size() >= 3) lines.push_back(std::move(l));
    }
  return Geometry(n, std::move(lines));
}

// A point table of PG(n,q) with line incidence, used for embedding search and
// for building the geometry of the whole space.
class ProjectiveSpace {
public:
  ProjectiveSpace(int dim, FiniteField f) : dim_(dim), field_(std::move(f)) {
    if (dim < 1) throw InvalidArguments("projective dimension must be >= 1");
    const long q = field_.size();
    long total = 1;
    for (int i = 0; i <= dim; ++i) total *= q;
    if (total > (1L << 26)) throw UnsupportedSize("projective space too large to tabulate");
    // Normalized vectors in lexicographic order.
    std::vector<std::uint32_t> v(dim + 1, 0);
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = dim; i >= 0; --i) {
        v[i] = std::uint32_t(c % q);
        c /= q;
      }
      auto first = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
      if (first == v.end() || *first != 1) continue;
      index_.emplace(encode(v), int(points_.size()));
      std::vector<FieldElem> pt;
      for (auto x : v) pt.push_back({x});
      points_.push_back(std::move(pt));
    }
    const std::size_t n = points_.size();
    pair_line_.assign(n * n, -1);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (pair_line_[a * n + b] >= 0) continue;
        std::vector<int> line{int(a), int(b)};
        for (auto t : field_.elements()) {
          std::vector<FieldElem> w(dim + 1);
          for (int i = 0; i <= dim; ++i) w[i] = field_.add(field_.mul(t, points_[a][i]), points_[b][i]);
          int idx = index_of(w);
          if (idx != int(b)) line.push_back(idx);
        }
        std::sort(line.begin(), line.end());
        line.erase(std::unique(line.begin(), line.end()), line.end());
        int li = int(lines_.size());
        for (int x : line)
          for (int y : line)
            if (x != y) pair_line_[std::size_t(x) * n + y] = li;
        lines_.push_back(std::move(line));
      }
  }

  int dim() const { return dim_; }
  const FiniteField& field() const { return field_; }
  int n_points() const { return int(points_.size()); }
  const std::vector<FieldElem>& coords(int i) const { return points_[i]; }
  ProjPoint point(int i) const { return ProjPoint(field_, points_[i]); }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  int line_index(int a, int b) const { return pair_line_[std::size_t(a) * points_.size() + b]; }
  bool collinear(int a, int b, int c) const { return line_index(a, b) == line_index(a, c); }

  // Index of an arbitrary non-zero vector after normalization.
  int index_of(std::vector<FieldElem> w) const {
    auto first = std::find_if(w.begin(), w.end(), [](FieldElem e) { return e.code != 0; });
    if (first == w.end()) throw InvalidArguments("zero vector");
    FieldElem s = field_.inv(*first);
    std::vector<std::uint32_t> v;
    for (auto e : w) v.push_back(field_.mul(e, s).code);
    return index_.at(encode(v));
  }
  int index_of(const ProjPoint& p) const { return index_of(p.coords); }

private:
  std::uint64_t encode(const std::vector<std::uint32_t>& v) const {
    std::uint64_t c = 0;
    for (auto x : v) c = c * std::uint64_t(field_.size()) + x;
    return c;
  }

  int dim_;
  FiniteField field_;
  std::vector<std::vector<FieldElem>> points_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> pair_line_;
  std::vector<std::vector<int>> lines_;
};

struct CoordinatizedGeometry {
  Geometry geometry;
  std::vector<ProjPoint> coords;
};

inline CoordinatizedGeometry pg_as_geometry(int n, const FiniteField& f) {
  ProjectiveSpace space(n, f);
  std::vector<Line> lines(space.lines().begin(), space.lines().end());
  std::vector<ProjPoint> coords;
  for (int i = 0; i < space.n_points(); ++i) coords.push_back(space.point(i));
  return {Geometry(space.n_points(), std::move(lines)), std::move(coords)};
}

// Points of F_q^n, written projectively as (1, a_1, ..., a_n), in
// lexicographic order of (a_1..a_n).
inline CoordinatizedGeometry ag_as_geometry(int n, const FiniteField& f) {
  if (n < 1) throw InvalidArguments("affine dimension must be >= 1");
  const long q = f.size();
  long total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  std::vector<std::vector<FieldElem>> vecs;
  for (long code = 0; code < total; ++code) {
    std::vector<FieldElem> v(n);
    long c = code;
    for (int i = n - 1; i >= 0; --i) {
      v[i] = {std::uint32_t(c % q)};
      c /= q;
    }
    vecs.push_back(std::move(v));
  }
  auto index_of = [&](const std::vector<FieldElem>& v) {
    long code = 0;
    for (auto e : v) code = code * q + e.code;
    return int(code);
  };
  std::vector<char> done(std::size_t(total) * total, 0);
  std::vector<Line> lines;
  if (q >= 3) {
    for (int a = 0; a < int(total); ++a)
      for (int b = a + 1; b < int(total); ++b) {
        if (done[std::size_t(a) * total + b]) continue;
        Line l;
        for (auto t : f.elements()) {
          std::vector<FieldElem> w(n);
          for (int i = 0; i < n; ++i) w[i] = f.add(vecs[a][i], f.mul(t, f.sub(vecs[b][i], vecs[a][i])));
          l.push_back(index_of(w));
        }
        std::sort(l.begin(), l.end());
        for (int x : l)
          for (int y : l) done[std::size_t(x) * total + y] = 1;
        lines.push_back(std::move(l));
      }
  }
  std::vector<ProjPoint> coords;
  for (const auto& v : vecs) {
    std::vector<FieldElem> h{f.one()};
    h.insert(h.end(), v.begin(), v.end());
    coords.emplace_back(f, std::move(h));
  }
  return {Geometry(int(total), std::move(lines)), std::move(coords)};
}

}  // namespace sylgal
