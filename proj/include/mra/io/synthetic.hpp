#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "mra/baselines.hpp"
#include "mra/errors.hpp"
#include "mra/grid_map.hpp"
#include "mra/spaces.hpp"

namespace mra::io {

/// A generated map together with a query that is solvable on the finest lattice.
struct SyntheticInstance
{
  GridMap map;
  Cell start;
  Cell goal;
};

/// Independent Bernoulli obstacles at the given density.
inline GridMap random_map(int width, int height, double density, std::uint64_t seed)
{
  GridMap map(width, height);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution blocked(density);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      if (blocked(rng)) map.set_blocked({x, y, 0});
  return map;
}

inline GridMap random_map(int width, int height, int depth, double density, std::uint64_t seed)
{
  GridMap map(width, height, depth);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution blocked(density);
  for (int z = 0; z < depth; ++z)
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x)
        if (blocked(rng)) map.set_blocked({x, y, z});
  return map;
}

namespace detail {

inline void fill_box(GridMap& map, Cell lo, Cell hi, bool value = true)
{
  for (int z = lo.z; z <= hi.z; ++z)
    for (int y = lo.y; y <= hi.y; ++y)
      for (int x = lo.x; x <= hi.x; ++x)
        if (map.in_bounds({x, y, z})) map.set_blocked({x, y, z}, value);
}

inline int lattice_coord(int j, int k) { return j * k + (k - 1) / 2; }

inline void sprinkle(GridMap& map, double density, std::mt19937_64& rng)
{
  std::bernoulli_distribution blocked(density);
  for (int y = 0; y < map.height(); ++y)
    for (int x = 0; x < map.width(); ++x)
      if (blocked(rng)) map.set_blocked({x, y, 0});
}

} // namespace detail

/// Two open rooms split by a solid wall of thickness wall >= 2k + 1, crossed
/// by one straight corridor one fine cell wide. The corridor row is never a
/// center row at multiplier k, so no move of length k can pass the wall.
/// Start and goal lie on multiplier-k centers on either side.
inline SyntheticInstance corridor_map(std::uint64_t seed, int k = 7)
{
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  const int cells_x = uniform(8, 12);
  const int cells_y = uniform(5, 8);
  const int width = cells_x * k;
  const int height = cells_y * k;
  const int wall = 2 * k + 1 + uniform(0, k);
  const int wall_x = width / 2 - wall / 2;

  for (int attempt = 0; attempt < 1000; ++attempt) {
    GridMap map(width, height);
    detail::sprinkle(map, 0.08, rng);
    detail::fill_box(map, {wall_x, 0, 0}, {wall_x + wall - 1, height - 1, 0});
    int row = uniform(1, height - 2);
    while (row % k == (k - 1) / 2) row = uniform(1, height - 2);
    detail::fill_box(map, {wall_x, row, 0}, {wall_x + wall - 1, row, 0}, false);

    const int left_cells = wall_x / k;
    const int right_first = (wall_x + wall + k - 1) / k;
    if (left_cells < 1 || right_first >= cells_x) throw GenerationError("corridor map too narrow");
    const Cell start{detail::lattice_coord(uniform(0, left_cells - 1), k),
                     detail::lattice_coord(uniform(0, cells_y - 1), k), 0};
    const Cell goal{detail::lattice_coord(uniform(right_first, cells_x - 1), k),
                    detail::lattice_coord(uniform(0, cells_y - 1), k), 0};
    if (map.blocked(start) || map.blocked(goal)) continue;
    if (std::isinf(dijkstra_optimal(map, start, goal))) continue;
    return {std::move(map), start, goal};
  }
  throw GenerationError("corridor_map: no connected instance for seed " + std::to_string(seed));
}

/// A U-shaped pocket whose mouth faces the start and whose closed end faces
/// the goal: a heuristic depression at least 20 fine cells deep.
inline SyntheticInstance culdesac_map(std::uint64_t seed, int align = 21)
{
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  const int depth = uniform(20, 40);
  const int half_width = uniform(10, 24);
  const int thickness = uniform(2, 3);
  const int width = uniform(220, 280);
  const int height = 2 * half_width + uniform(50, 80);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    GridMap map(width, height);
    detail::sprinkle(map, 0.03, rng);

    const int cy = height / 2 + uniform(-5, 5);
    const int mouth_x = width / 2 - depth / 2 + uniform(-10, 10);
    const int back_x = mouth_x + depth;
    // Arms, then the closed end.
    detail::fill_box(map, {mouth_x, cy - half_width - thickness, 0}, {back_x, cy - half_width - 1, 0});
    detail::fill_box(map, {mouth_x, cy + half_width + 1, 0}, {back_x, cy + half_width + thickness, 0});
    detail::fill_box(map, {back_x + 1, cy - half_width - thickness, 0},
                     {back_x + thickness, cy + half_width + thickness, 0});
    // Clear the pocket interior so the depression is not broken up.
    detail::fill_box(map, {mouth_x, cy - half_width, 0}, {back_x, cy + half_width, 0}, false);

    auto snap = [&](int v) { return (v / align) * align + (align - 1) / 2; };
    const Cell start{snap(mouth_x - uniform(40, 90)), snap(cy + uniform(-half_width / 2, half_width / 2)), 0};
    const Cell goal{snap(back_x + thickness + uniform(20, 60)), snap(cy + uniform(-half_width, half_width)), 0};
    if (!map.in_bounds(start) || !map.in_bounds(goal)) continue;
    if (map.blocked(start) || map.blocked(goal)) continue;
    if (std::isinf(dijkstra_optimal(map, start, goal))) continue;
    return {std::move(map), start, goal};
  }
  throw GenerationError("culdesac_map: no connected instance for seed " + std::to_string(seed));
}

} // namespace mra::io
