#pragma once

// Point colourings with values red-only, blue-only and bicoloured.

#include <cstdint>
#include <string>
#include <vector>

#include "sylgal/error.hpp"

namespace sylgal {

// Bit 1 = red, bit 2 = blue.
enum class Colour : std::uint8_t { RedOnly = 1, BlueOnly = 2, Bicoloured = 3 };

inline bool has_red(Colour c) { return (std::uint8_t(c) & 1) != 0; }
inline bool has_blue(Colour c) { return (std::uint8_t(c) & 2) != 0; }

inline Colour swap_colours(Colour c) {
  switch (c) {
    case Colour::RedOnly: return Colour::BlueOnly;
    case Colour::BlueOnly: return Colour::RedOnly;
    default: return c;
  }
}

inline Colour colour_union(Colour a, Colour b) { return Colour(std::uint8_t(a) | std::uint8_t(b)); }

inline std::string colour_name(Colour c) {
  switch (c) {
    case Colour::RedOnly: return "R";
    case Colour::BlueOnly: return "B";
    default: return "RB";
  }
}

inline Colour parse_colour(const std::string& s) {
  if (s == "R") return Colour::RedOnly;
  if (s == "B") return Colour::BlueOnly;
  if (s == "RB" || s == "BR") return Colour::Bicoloured;
  throw InvalidArguments("unknown colour '" + s + "' (expected R, B or RB)");
}

using Coloring = std::vector<Colour>;

inline Coloring uniform_coloring(int n, Colour c) { return Coloring(std::size_t(n), c); }

inline Coloring swapped(const Coloring& c) {
  Coloring out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = swap_colours(c[i]);
  return out;
}

// Colour of point i moves to point sigma[i].
inline Coloring permuted(const Coloring& c, const std::vector<int>& sigma) {
  Coloring out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[std::size_t(sigma[i])] = c[i];
  return out;
}

}  // namespace sylgal
