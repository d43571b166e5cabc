#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mra/deadline.hpp"
#include "mra/grid_map.hpp"
#include "mra/mra_star.hpp"
#include "mra/open_list.hpp"
#include "mra/plan_types.hpp"
#include "mra/resolution_ladder.hpp"
#include "mra/spaces.hpp"

namespace mra {

struct BaselineOptions
{
  double timeout_s = kInfinity;
  bool record_trace = false;
};

namespace detail {

/// Single-queue weighted A* (key g + w*h) without re-opening. `expand(cell,
/// out)` appends the successors of cell. Terminates as soon as g(goal) is no
/// larger than the smallest key, matching the multi-queue engine's rule.
template <class Expand, class Observer>
PlanResult single_queue_search(const GridMap& map, Cell start, Cell goal, double w,
                               const BaselineOptions& options, Expand&& expand,
                               Observer& observer)
{
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  DeadlineChecker<Clock> deadline(options.timeout_s, started);

  struct Node
  {
    double g = kInfinity;
    double h = 0.0;
    std::optional<StateId> bp;
    bool closed = false;
  };
  const HeuristicKind kind = default_heuristic(map.dims());
  std::unordered_map<StateId, Node> nodes;
  auto node_for = [&](StateId id) -> Node& {
    auto [it, inserted] = nodes.try_emplace(id);
    if (inserted) it->second.h = heuristic(map.cell(id), goal, kind);
    return it->second;
  };

  PlanResult result;
  result.expansions.assign(1, 0);
  OpenList open;
  const StateId start_id = map.id(start);
  const StateId goal_id = map.id(goal);
  Node& s0 = node_for(start_id);
  s0.g = 0.0;
  node_for(goal_id);
  open.push_or_update(start_id, s0.g + w * s0.h, s0.g);

  std::vector<Successor> succs;
  result.status = PlanStatus::exhausted;
  while (!open.empty()) {
    if (deadline.expired(result.expansions[0])) {
      result.status = PlanStatus::timeout;
      break;
    }
    if (nodes.at(goal_id).g <= open.min_key()) {
      result.status = PlanStatus::solved;
      break;
    }
    const StateId s = open.pop().id;
    Node& n = nodes.at(s);
    if (n.closed) ++result.duplicate_expansions;
    ++result.expansions[0];

    const Cell cell = map.cell(s);
    observer.on_expand(cell, 0);
    if (options.record_trace) result.trace.push_back({cell, 0});
    succs.clear();
    expand(cell, succs);
    result.max_branching = std::max(result.max_branching, succs.size());
    const double g = n.g;
    for (const Successor& succ : succs) {
      const StateId id = map.id(succ.cell);
      Node& m = node_for(id);
      if (m.closed || !(m.g > g + succ.cost)) continue;
      m.g = g + succ.cost;
      m.bp = s;
      open.push_or_update(id, m.g + w * m.h, m.g);
    }
    nodes.at(s).closed = true;
  }

  result.generated = nodes.size();
  if (result.status == PlanStatus::solved) {
    std::optional<StateId> at = goal_id;
    while (at) {
      result.path.push_back(map.cell(*at));
      if (result.path.size() > nodes.size())
        throw std::logic_error("single_queue_search: back-pointer cycle");
      at = nodes.at(*at).bp;
    }
    std::reverse(result.path.begin(), result.path.end());
    result.cost = path_cost(result.path);
    result.winning_queue = 0;
  }
  result.wall_time_s = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

inline void check_weight(double w)
{
  if (!(w >= 1.0)) throw ConfigError("weight must be >= 1");
}

} // namespace detail

/// Weighted A* on a single resolution: WA-High with multiplier 1, WA-Low with
/// the coarsest multiplier. Start and goal must be centers of that lattice.
template <class Observer = NullObserver>
PlanResult weighted_astar(const GridMap& map, Cell start, Cell goal, int multiplier, double w,
                          const BaselineOptions& options = {}, Observer&& observer = {})
{
  if (multiplier <= 0 || multiplier % 2 == 0)
    throw ConfigError("multiplier " + std::to_string(multiplier) +
                      " is not odd: every multiplier must be an odd positive integer");
  detail::check_weight(w);
  require_free(map, start, "start");
  require_free(map, goal, "goal");
  if (!coincides(start, multiplier, map.dims()))
    throw InputError("start is not a cell center at multiplier " + std::to_string(multiplier));
  if (!coincides(goal, multiplier, map.dims()))
    throw InputError("goal is not a cell center at multiplier " + std::to_string(multiplier));
  return detail::single_queue_search(
    map, start, goal, w, options,
    [&](Cell c, std::vector<Successor>& out) { successors_at_scale(map, c, multiplier, out); },
    observer);
}

/// Weighted A* over the union action space: expanding s applies the action
/// set of every level whose lattice contains s, all in one full expansion.
template <class Observer = NullObserver>
PlanResult wa_union(const GridMap& map, Cell start, Cell goal, const ResolutionLadder& ladder,
                    double w, const BaselineOptions& options = {}, Observer&& observer = {})
{
  detail::check_weight(w);
  require_free(map, start, "start");
  require_free(map, goal, "goal");
  return detail::single_queue_search(
    map, start, goal, w, options,
    [&](Cell c, std::vector<Successor>& out) {
      const QueueMask spaces = space_mask(c, ladder, map.dims());
      for (std::size_t i = 0; i < ladder.size(); ++i)
        if (spaces.test(i)) successors(map, ladder, c, i, out);
    },
    observer);
}

namespace detail {

/// Fine moves are valid iff every cell of the axis-aligned box spanned by
/// the two endpoints is free.
inline bool unit_move_free(const GridMap& map, Cell a, Cell b)
{
  for (int z = std::min(a.z, b.z); z <= std::max(a.z, b.z); ++z)
    for (int y = std::min(a.y, b.y); y <= std::max(a.y, b.y); ++y)
      for (int x = std::min(a.x, b.x); x <= std::max(a.x, b.x); ++x)
        if (map.blocked({x, y, z})) return false;
  return true;
}

struct DijkstraTree
{
  std::vector<double> dist;
  std::vector<std::int64_t> parent;
  std::vector<StateId> order;  ///< settle order; parents precede children
};

/// Plain Dijkstra over fine moves with dense tables and lazy deletion. Stops
/// once `target` is settled (pass -1 to settle everything).
inline DijkstraTree dijkstra_tree(const GridMap& map, Cell source, std::int64_t target)
{
  DijkstraTree t;
  t.dist.assign(map.size(), kInfinity);
  t.parent.assign(map.size(), -1);
  if (map.blocked(source)) return t;

  using Item = std::pair<double, StateId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  const StateId src = map.id(source);
  t.dist[src] = 0.0;
  heap.push({0.0, src});
  std::vector<char> settled(map.size(), 0);
  const auto dirs = directions(map.dims());
  while (!heap.empty()) {
    const auto [d, id] = heap.top();
    heap.pop();
    if (settled[id]) continue;
    settled[id] = 1;
    t.order.push_back(id);
    if (static_cast<std::int64_t>(id) == target) break;
    const Cell c = map.cell(id);
    for (const Cell dir : dirs) {
      const Cell n = c + dir;
      if (!map.in_bounds(n) || !unit_move_free(map, c, n)) continue;
      const double len = std::sqrt(static_cast<double>(dir.x * dir.x + dir.y * dir.y + dir.z * dir.z));
      const StateId nid = map.id(n);
      if (d + len < t.dist[nid]) {
        t.dist[nid] = d + len;
        t.parent[nid] = static_cast<std::int64_t>(id);
        heap.push({t.dist[nid], nid});
      }
    }
  }
  return t;
}

} // namespace detail

/// Exact shortest-path cost on the finest lattice (infinity if disconnected).
/// The cost is re-summed along the recovered path with path_cost so that any
/// two optimal paths report the same bits.
inline double dijkstra_optimal(const GridMap& map, Cell start, Cell goal)
{
  if (map.blocked(start) || map.blocked(goal)) return kInfinity;
  const auto tree = detail::dijkstra_tree(map, start, static_cast<std::int64_t>(map.id(goal)));
  const StateId goal_id = map.id(goal);
  if (std::isinf(tree.dist[goal_id])) return kInfinity;
  std::vector<Cell> path;
  for (std::int64_t at = static_cast<std::int64_t>(goal_id); at >= 0; at = tree.parent[at])
    path.push_back(map.cell(static_cast<StateId>(at)));
  std::reverse(path.begin(), path.end());
  return path_cost(path);
}

/// Fine-lattice distance from source to every cell (infinity where
/// unreachable), each re-summed canonically along its shortest-path tree
/// branch like dijkstra_optimal.
inline std::vector<double> dijkstra_distances(const GridMap& map, Cell source)
{
  const auto tree = detail::dijkstra_tree(map, source, -1);
  std::vector<std::array<std::int64_t, 4>> counts(map.size(), {0, 0, 0, 0});
  std::vector<double> dist(map.size(), kInfinity);
  for (const StateId id : tree.order) {
    if (const auto p = tree.parent[id]; p >= 0) {
      counts[id] = counts[static_cast<StateId>(p)];
      ++counts[id][detail::nonzero_axes(map.cell(id) - map.cell(static_cast<StateId>(p)))];
    }
    dist[id] = detail::canonical_length(counts[id]);
  }
  return dist;
}

} // namespace mra
