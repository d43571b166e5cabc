#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mra/cell.hpp"
#include "mra/errors.hpp"

namespace mra {

/// Occupancy grid on the finest lattice, 2D or 3D. Immutable once handed to a
/// planner; safe to share between planner instances.
class GridMap
{
public:
  GridMap() = default;

  GridMap(int width, int height) : GridMap(2, width, height, 1) {}
  GridMap(int width, int height, int depth) : GridMap(3, width, height, depth) {}

  int dims() const noexcept { return dims_; }
  int width() const noexcept { return extents_[0]; }
  int height() const noexcept { return extents_[1]; }
  int depth() const noexcept { return extents_[2]; }
  std::size_t size() const noexcept { return occupancy_.size(); }

  bool in_bounds(Cell c) const noexcept
  {
    return c.x >= 0 && c.y >= 0 && c.z >= 0 && c.x < extents_[0] && c.y < extents_[1] &&
           c.z < extents_[2];
  }

  /// Out-of-bounds cells count as blocked.
  bool blocked(Cell c) const noexcept { return !in_bounds(c) || occupancy_[index(c)] != 0; }
  bool free(Cell c) const noexcept { return !blocked(c); }

  void set_blocked(Cell c, bool value = true)
  {
    if (!in_bounds(c)) throw InputError("set_blocked: cell out of bounds");
    occupancy_[index(c)] = value ? 1 : 0;
  }

  StateId id(Cell c) const noexcept { return static_cast<StateId>(index(c)); }

  Cell cell(StateId id) const noexcept
  {
    const auto w = static_cast<StateId>(extents_[0]);
    const auto h = static_cast<StateId>(extents_[1]);
    return {static_cast<int>(id % w), static_cast<int>((id / w) % h), static_cast<int>(id / (w * h))};
  }

  std::size_t free_count() const noexcept
  {
    return static_cast<std::size_t>(std::count(occupancy_.begin(), occupancy_.end(), 0));
  }

  friend bool operator==(const GridMap&, const GridMap&) = default;

private:
  GridMap(int dims, int width, int height, int depth) : dims_(dims), extents_{width, height, depth}
  {
    if (width <= 0 || height <= 0 || depth <= 0) throw InputError("map extents must be positive");
    occupancy_.assign(static_cast<std::size_t>(width) * height * depth, 0);
  }

  std::size_t index(Cell c) const noexcept
  {
    return (static_cast<std::size_t>(c.z) * extents_[1] + c.y) * extents_[0] + c.x;
  }

  int dims_ = 2;
  std::array<int, 3> extents_{0, 0, 1};
  std::vector<std::uint8_t> occupancy_;
};

} // namespace mra
