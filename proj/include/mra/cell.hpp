#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace mra {

/// A point on the finest lattice. 2D maps keep z = 0.
struct Cell
{
  int x = 0;
  int y = 0;
  int z = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Cell operator*(int k, Cell d) { return {k * d.x, k * d.y, k * d.z}; }

inline std::ostream& operator<<(std::ostream& os, const Cell& c)
{
  return os << '(' << c.x << ',' << c.y << ',' << c.z << ')';
}

/// Dense linear index of a cell within its map.
using StateId = std::uint64_t;

} // namespace mra
