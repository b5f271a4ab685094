#pragma once

// Coloured point sets in the rational plane: either all points are
// collinear, or two points sharing a colour span a line carrying no third
// point of the other colour. Exact arithmetic throughout.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sylgal/coloring.hpp"
#include "sylgal/error.hpp"

namespace sylgal {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ColoredPoint {
  Rational x, y;
  Colour colour = Colour::Bicoloured;

  bool operator==(const ColoredPoint&) const = default;
};

class ColoredPointSet {
public:
  ColoredPointSet() = default;
  explicit ColoredPointSet(std::vector<ColoredPoint> pts) : pts_(std::move(pts)) {
    for (std::size_t i = 0; i < pts_.size(); ++i)
      for (std::size_t j = i + 1; j < pts_.size(); ++j)
        if (pts_[i].x == pts_[j].x && pts_[i].y == pts_[j].y)
          throw InvalidArguments("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  }

  std::size_t size() const { return pts_.size(); }
  const ColoredPoint& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<ColoredPoint>& points() const { return pts_; }

  bool operator==(const ColoredPointSet&) const = default;

private:
  std::vector<ColoredPoint> pts_;
};

// a x + b y + c = 0 with gcd(a,b,c) = 1 and the first nonzero of a, b positive.
struct LineCoeffs {
  Integer a, b, c;

  bool contains(const ColoredPoint& p) const { return a * p.x + b * p.y + c == 0; }
  bool normalized() const {
    if (a == 0 && b == 0) return false;
    if (a < 0 || (a == 0 && b < 0)) return false;
    Integer g = gcd(gcd(abs(a), abs(b)), abs(c));
    return g == 1;
  }
  bool operator==(const LineCoeffs&) const = default;
};

inline LineCoeffs line_through(const ColoredPoint& p, const ColoredPoint& q) {
  Rational ra = p.y - q.y, rb = q.x - p.x, rc = p.x * q.y - q.x * p.y;
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer l = lcm(lcm(denominator(ra), denominator(rb)), denominator(rc));
  Integer a = numerator(ra) * (l / denominator(ra)), b = numerator(rb) * (l / denominator(rb)),
          c = numerator(rc) * (l / denominator(rc));
  Integer g = gcd(gcd(abs(a), abs(b)), abs(c));
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

struct WitnessCertificate {
  enum class Kind { Collinear, Witness };
  Kind kind = Kind::Collinear;
  LineCoeffs line;
  // Witness only: the pair, the colour they share (RedOnly means red,
  // BlueOnly means blue), and every set point on the line with its colour.
  int a = -1, b = -1;
  Colour shared = Colour::RedOnly;
  std::vector<std::pair<int, Colour>> on_line;

  bool operator==(const WitnessCertificate&) const = default;
};

namespace detail {

// The points scaled to integers; incidence is invariant under the scaling.
inline std::vector<std::pair<Integer, Integer>> integer_points(const ColoredPointSet& s) {
  Integer l = 1;
  for (const auto& p : s.points()) l = lcm(lcm(l, denominator(p.x)), denominator(p.y));
  std::vector<std::pair<Integer, Integer>> out;
  for (const auto& p : s.points())
    out.emplace_back(numerator(p.x) * (l / denominator(p.x)), numerator(p.y) * (l / denominator(p.y)));
  return out;
}

inline bool has_colour(Colour c, Colour which) { return which == Colour::RedOnly ? has_red(c) : has_blue(c); }

inline Colour other_colour(Colour which) { return which == Colour::RedOnly ? Colour::BlueOnly : Colour::RedOnly; }

}  // namespace detail

// Scans pairs (i, j) in lexicographic order, red before blue, and returns
// the first pair whose line has no third point of the other colour.
inline WitnessCertificate find_witness(const ColoredPointSet& s) {
  const int n = int(s.size());
  if (n < 2) throw InvalidArguments("a witness search needs at least two points");
  auto z = detail::integer_points(s);
  auto on = [&](int i, int j, int k) {
    return (z[j].first - z[i].first) * (z[k].second - z[i].second) ==
           (z[j].second - z[i].second) * (z[k].first - z[i].first);
  };

  bool all_collinear = true;
  for (int k = 2; k < n && all_collinear; ++k) all_collinear = on(0, 1, k);
  WitnessCertificate cert;
  if (all_collinear) {
    cert.kind = WitnessCertificate::Kind::Collinear;
    cert.line = line_through(s[0], s[1]);
    return cert;
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (Colour which : {Colour::RedOnly, Colour::BlueOnly}) {
        if (!detail::has_colour(s[i].colour, which) || !detail::has_colour(s[j].colour, which)) continue;
        const Colour other = detail::other_colour(which);
        std::vector<int> line{i, j};
        bool blocked = false;
        for (int k = 0; k < n && !blocked; ++k) {
          if (k == i || k == j || !on(i, j, k)) continue;
          line.push_back(k);
          blocked = detail::has_colour(s[k].colour, other);
        }
        if (blocked) continue;
        std::sort(line.begin(), line.end());
        cert.kind = WitnessCertificate::Kind::Witness;
        cert.line = line_through(s[i], s[j]);
        cert.a = i;
        cert.b = j;
        cert.shared = which;
        for (int k : line) cert.on_line.emplace_back(k, s[k].colour);
        return cert;
      }
  throw GeometryAnomaly("non-collinear coloured point set without a witness pair");
}

inline bool verify_certificate(const ColoredPointSet& s, const WitnessCertificate& c) {
  const int n = int(s.size());
  if (!c.line.normalized()) return false;
  if (c.kind == WitnessCertificate::Kind::Collinear) {
    if (n < 2) return false;
    for (const auto& p : s.points())
      if (!c.line.contains(p)) return false;
    return true;
  }
  if (c.a < 0 || c.b < 0 || c.a >= n || c.b >= n || c.a == c.b) return false;
  if (c.shared != Colour::RedOnly && c.shared != Colour::BlueOnly) return false;
  if (!detail::has_colour(s[c.a].colour, c.shared) || !detail::has_colour(s[c.b].colour, c.shared)) return false;
  if (!c.line.contains(s[c.a]) || !c.line.contains(s[c.b])) return false;
  std::vector<std::pair<int, Colour>> incident;
  for (int k = 0; k < n; ++k)
    if (c.line.contains(s[k])) incident.emplace_back(k, s[k].colour);
  if (incident != c.on_line) return false;
  const Colour other = detail::other_colour(c.shared);
  for (auto [k, col] : incident)
    if (k != c.a && k != c.b && detail::has_colour(col, other)) return false;
  return true;
}

// ---- point file format: `point x y R|B|RB`, rationals as num/den ----

inline Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& t) {
    std::size_t i = (t.size() > 1 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) throw InvalidArguments("bad rational '" + text + "'");
    for (std::size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') throw InvalidArguments("bad rational '" + text + "'");
    return Integer(t[0] == '+' ? t.substr(1) : t);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash)), den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidArguments("zero denominator in '" + text + "'");
  return Rational(num, den);
}

inline std::string format_rational(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

inline ColoredPointSet read_point_set(std::istream& in) {
  std::vector<ColoredPoint> pts;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word != "point") throw ParseError(line_no, "expected 'point', got '" + word + "'");
    std::string x, y, col, extra;
    if (!(ls >> x >> y >> col) || (ls >> extra)) throw ParseError(line_no, "expected 'point x y colour'");
    try {
      pts.push_back({parse_rational(x), parse_rational(y), parse_colour(col)});
    } catch (const InvalidArguments& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return ColoredPointSet(std::move(pts));
}

inline void write_point_set(std::ostream& out, const ColoredPointSet& s) {
  for (const auto& p : s.points())
    out << "point " << format_rational(p.x) << ' ' << format_rational(p.y) << ' ' << colour_name(p.colour) << '\n';
}

inline void write_certificate(std::ostream& out, const WitnessCertificate& c) {
  out << (c.kind == WitnessCertificate::Kind::Collinear ? "collinear" : "witness") << '\n';
  out << "line " << c.line.a << ' ' << c.line.b << ' ' << c.line.c << '\n';
  if (c.kind == WitnessCertificate::Kind::Collinear) return;
  out << "pair " << c.a << ' ' << c.b << ' ' << (c.shared == Colour::RedOnly ? "R" : "B") << '\n';
  for (auto [k, col] : c.on_line) out << "on_line " << k << ' ' << colour_name(col) << '\n';
}

}  // namespace sylgal
