#pragma once

#include <algorithm>
#include <array>
#include <bitset>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

#include "mra/cell.hpp"
#include "mra/grid_map.hpp"
#include "mra/resolution_ladder.hpp"

namespace mra {

enum class HeuristicKind
{
  octile,
  euclidean
};

/// Octile for 2D maps, Euclidean for 3D.
inline HeuristicKind default_heuristic(int dims) noexcept
{
  return dims == 2 ? HeuristicKind::octile : HeuristicKind::euclidean;
}

using QueueMask = std::bitset<kMaxQueues>;

struct Successor
{
  Cell cell;
  double cost = 0.0;
};

namespace detail {

inline constexpr std::array<double, 4> kSqrt = {0.0, 1.0, 1.4142135623730951, 1.7320508075688772};

template <int Dims>
constexpr auto make_directions()
{
  constexpr std::size_t n = Dims == 2 ? 8 : 26;
  std::array<Cell, n> dirs{};
  std::size_t idx = 0;
  const int zlo = Dims == 2 ? 0 : -1;
  const int zhi = Dims == 2 ? 0 : 1;
  for (int dz = zlo; dz <= zhi; ++dz)
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx)
        if (dx || dy || dz) dirs[idx++] = Cell{dx, dy, dz};
  return dirs;
}

inline constexpr auto kDirections2 = make_directions<2>();
inline constexpr auto kDirections3 = make_directions<3>();

inline int nonzero_axes(Cell d) noexcept { return (d.x != 0) + (d.y != 0) + (d.z != 0); }

/// If d = k * u with u in {-1,0,1}^3, returns k (> 0); otherwise 0.
inline int lattice_step_scale(Cell d) noexcept
{
  int k = 0;
  for (int v : {d.x, d.y, d.z}) {
    const int a = std::abs(v);
    if (a == 0) continue;
    if (k == 0)
      k = a;
    else if (a != k)
      return 0;
  }
  return k;
}

/// Length of a path made of counts[m] unit steps along m axes (m = 1, 2, 3),
/// rounded once per length class. Every caller that combines step counts goes
/// through here, so equal step compositions give bit-identical lengths.
inline double canonical_length(const std::array<std::int64_t, 4>& counts) noexcept
{
  return static_cast<double>(counts[1]) + static_cast<double>(counts[2]) * kSqrt[2] +
         static_cast<double>(counts[3]) * kSqrt[3];
}

} // namespace detail

/// The 8 (2D) or 26 (3D) unit direction vectors, in a fixed order.
inline std::span<const Cell> directions(int dims) noexcept
{
  if (dims == 2) return detail::kDirections2;
  return detail::kDirections3;
}

/// True iff s is the center of a cell of side k, i.e. every coordinate x
/// satisfies x mod k = (k - 1) / 2.
inline bool coincides(Cell s, int k, int dims) noexcept
{
  const int c = (k - 1) / 2;
  return s.x % k == c && s.y % k == c && (dims < 3 || s.z % k == c);
}

inline QueueMask space_mask(Cell s, const ResolutionLadder& ladder, int dims) noexcept
{
  QueueMask mask;
  for (std::size_t i = 0; i < ladder.size(); ++i)
    if (coincides(s, ladder.multipliers()[i], dims)) mask.set(i);
  return mask;
}

/// Sorted indices of every resolution level whose lattice contains s.
inline std::vector<std::size_t> get_space_indices(Cell s, const ResolutionLadder& ladder, int dims)
{
  std::vector<std::size_t> out;
  const auto mask = space_mask(s, ladder, dims);
  for (std::size_t i = 0; i < ladder.size(); ++i)
    if (mask.test(i)) out.push_back(i);
  return out;
}

/// Visits every fine cell whose closed box meets the segment between the
/// centers of a and b, starting at a. Where the segment crosses several cell
/// boundaries at once (an exact corner or edge), every cell sharing that
/// corner is visited. Cells may be visited more than once. Stops early and
/// returns false as soon as visit returns false.
template <class Visit>
bool for_each_supercover_cell(Cell a, Cell b, Visit&& visit)
{
  const std::array<int, 3> delta = {b.x - a.x, b.y - a.y, b.z - a.z};
  std::array<std::int64_t, 3> span{};
  std::array<int, 3> sign{};
  std::array<std::int64_t, 3> crossed{};
  for (int j = 0; j < 3; ++j) {
    span[j] = std::abs(delta[j]);
    sign[j] = delta[j] > 0 ? 1 : (delta[j] < 0 ? -1 : 0);
  }

  std::array<int, 3> cur = {a.x, a.y, a.z};
  if (!visit(Cell{cur[0], cur[1], cur[2]})) return false;

  // Boundary m of axis j is crossed at t = (2m + 1) / (2 * span[j]).
  // Events are merged in t order with exact integer comparisons.
  for (;;) {
    int best = -1;
    for (int j = 0; j < 3; ++j) {
      if (crossed[j] >= span[j]) continue;
      if (best < 0 ||
          (2 * crossed[j] + 1) * span[best] < (2 * crossed[best] + 1) * span[j])
        best = j;
    }
    if (best < 0) break;

    unsigned simultaneous = 0;
    for (int j = 0; j < 3; ++j) {
      if (crossed[j] >= span[j]) continue;
      if ((2 * crossed[j] + 1) * span[best] == (2 * crossed[best] + 1) * span[j])
        simultaneous |= 1u << j;
    }

    for (unsigned subset = simultaneous; subset != 0; subset = (subset - 1) & simultaneous) {
      std::array<int, 3> c = cur;
      for (int j = 0; j < 3; ++j)
        if (subset & (1u << j)) c[j] += sign[j];
      if (!visit(Cell{c[0], c[1], c[2]})) return false;
    }
    for (int j = 0; j < 3; ++j)
      if (simultaneous & (1u << j)) {
        cur[j] += sign[j];
        ++crossed[j];
      }
  }
  return true;
}

/// Straight transition between cell centers is collision free: every fine
/// cell on its supercover is in bounds and free. No corner cutting.
inline bool edge_valid(const GridMap& map, Cell a, Cell b)
{
  return for_each_supercover_cell(a, b, [&](Cell c) { return map.free(c); });
}

/// Euclidean length. Lattice steps k*u are computed as k * sqrt(|u|^2) so the
/// same move always has bit-identical cost.
inline double edge_cost(Cell a, Cell b) noexcept
{
  const Cell d = b - a;
  if (const int k = detail::lattice_step_scale(d); k > 0)
    return k * detail::kSqrt[detail::nonzero_axes(d)];
  return std::sqrt(static_cast<double>(d.x) * d.x + static_cast<double>(d.y) * d.y +
                   static_cast<double>(d.z) * d.z);
}

/// Step counts of a straight octile path from a to b in the plane: index 1
/// holds unit steps, index 2 diagonal steps.
inline std::array<std::int64_t, 4> octile_steps(Cell a, Cell b) noexcept
{
  const std::int64_t dx = std::abs(a.x - b.x);
  const std::int64_t dy = std::abs(a.y - b.y);
  const std::int64_t lo = std::min(dx, dy);
  return {0, std::max(dx, dy) - lo, lo, 0};
}

inline double heuristic(Cell a, Cell b, HeuristicKind kind) noexcept
{
  if (kind == HeuristicKind::octile) return detail::canonical_length(octile_steps(a, b));
  const double dx = std::abs(a.x - b.x);
  const double dy = std::abs(a.y - b.y);
  const double dz = std::abs(a.z - b.z);
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// Appends the successors of s for cell size k: moves of k along each unit
/// direction whose edge is valid.
inline void successors_at_scale(const GridMap& map, Cell s, int k, std::vector<Successor>& out)
{
  for (const Cell d : directions(map.dims())) {
    const Cell next = s + k * d;
    if (!map.in_bounds(next)) continue;
    if (!edge_valid(map, s, next)) continue;
    out.push_back({next, k * detail::kSqrt[detail::nonzero_axes(d)]});
  }
}

inline void successors(const GridMap& map, const ResolutionLadder& ladder, Cell s, std::size_t i,
                       std::vector<Successor>& out)
{
  successors_at_scale(map, s, ladder.multipliers()[i], out);
}

inline std::vector<Successor> successors(const GridMap& map, const ResolutionLadder& ladder, Cell s,
                                         std::size_t i)
{
  std::vector<Successor> out;
  successors(map, ladder, s, i, out);
  return out;
}

/// Sum of edge costs along a path. Lattice steps are grouped by their length
/// class (1, sqrt 2, sqrt 3) and summed as exact integers first, so two paths
/// of equal real length report bit-identical costs regardless of step order.
/// An octile heuristic value equals the cost of a straight octile path bit
/// for bit.
inline double path_cost(std::span<const Cell> path) noexcept
{
  std::array<std::int64_t, 4> scaled{};
  double other = 0.0;
  for (std::size_t n = 1; n < path.size(); ++n) {
    const Cell d = path[n] - path[n - 1];
    if (const int k = detail::lattice_step_scale(d); k > 0)
      scaled[detail::nonzero_axes(d)] += k;
    else
      other += edge_cost(path[n - 1], path[n]);
  }
  return detail::canonical_length(scaled) + other;
}

} // namespace mra
