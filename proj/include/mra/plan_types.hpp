#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mra/cell.hpp"
#include "mra/errors.hpp"
#include "mra/grid_map.hpp"
#include "mra/policies.hpp"
#include "mra/resolution_ladder.hpp"

namespace mra {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class PlanStatus
{
  solved,
  exhausted,
  timeout
};

inline const char* to_string(PlanStatus s) noexcept
{
  switch (s) {
  case PlanStatus::solved: return "solved";
  case PlanStatus::exhausted: return "exhausted";
  case PlanStatus::timeout: return "timeout";
  }
  return "?";
}

struct PlannerConfig
{
  double w1 = 3.0;  ///< weight on h in the inadmissible queues
  double w2 = 3.0;  ///< suboptimality bound enforced through the anchor
  PolicyKind policy = PolicyKind::round_robin;
  double timeout_s = kInfinity;
  std::uint64_t seed = 0;
  bool record_trace = false;  ///< keep the expansion order in PlanResult::trace

  void validate() const
  {
    if (!(w1 >= 1.0)) throw ConfigError("w1 must be >= 1");
    if (!(w2 >= 1.0)) throw ConfigError("w2 must be >= 1");
    if (!(timeout_s > 0.0)) throw ConfigError("timeout must be > 0");
  }
};

struct Expansion
{
  Cell cell;
  std::size_t queue = 0;

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

struct PlanResult
{
  PlanStatus status = PlanStatus::exhausted;
  std::vector<Cell> path;
  double cost = kInfinity;
  std::vector<std::uint64_t> expansions;  ///< expansions[i]: states expanded from queue i
  std::uint64_t generated = 0;            ///< distinct states created
  double wall_time_s = 0.0;
  std::optional<std::size_t> winning_queue;
  std::uint64_t duplicate_expansions = 0;  ///< (state, queue) pairs expanded twice; always 0
  std::size_t max_branching = 0;           ///< most successors produced by one expansion
  std::vector<Expansion> trace;

  bool solved() const noexcept { return status == PlanStatus::solved; }

  std::uint64_t total_expansions() const noexcept
  {
    return std::accumulate(expansions.begin(), expansions.end(), std::uint64_t{0});
  }
};

/// Everything except wall time, for determinism checks.
inline bool same_outcome(const PlanResult& a, const PlanResult& b)
{
  return a.status == b.status && a.path == b.path &&
         (a.cost == b.cost || (std::isinf(a.cost) && std::isinf(b.cost))) &&
         a.expansions == b.expansions && a.generated == b.generated &&
         a.winning_queue == b.winning_queue &&
         a.duplicate_expansions == b.duplicate_expansions &&
         a.max_branching == b.max_branching && a.trace == b.trace;
}

struct Problem
{
  const GridMap& map;
  Cell start;
  Cell goal;
  ResolutionLadder ladder;
};

inline void require_free(const GridMap& map, Cell c, std::string_view what)
{
  if (!map.in_bounds(c))
    throw InputError(std::string(what) + " is out of bounds");
  if (map.blocked(c))
    throw InputError(std::string(what) + " is blocked");
}

} // namespace mra
