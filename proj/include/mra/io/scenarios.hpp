#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mra/errors.hpp"
#include "mra/grid_map.hpp"
#include "mra/resolution_ladder.hpp"
#include "mra/spaces.hpp"

namespace mra::io {

struct Scenario
{
  std::string map_id;
  std::size_t index = 0;
  Cell start;
  Cell goal;
  std::uint64_t seed = 0;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Component label per cell under fine moves; -1 for blocked cells.
inline std::vector<std::int32_t> connected_components(const GridMap& map)
{
  std::vector<std::int32_t> label(map.size(), -1);
  std::vector<Successor> succs;
  std::deque<StateId> frontier;
  std::int32_t next = 0;
  for (StateId id = 0; id < map.size(); ++id) {
    if (label[id] >= 0 || map.blocked(map.cell(id))) continue;
    label[id] = next;
    frontier.push_back(id);
    while (!frontier.empty()) {
      const StateId s = frontier.front();
      frontier.pop_front();
      succs.clear();
      successors_at_scale(map, map.cell(s), 1, succs);
      for (const auto& n : succs) {
        const StateId nid = map.id(n.cell);
        if (label[nid] < 0) {
          label[nid] = next;
          frontier.push_back(nid);
        }
      }
    }
    ++next;
  }
  return label;
}

inline constexpr std::uint64_t kMaxScenarioAttempts = 1'000'000;

/// Draws `count` start/goal pairs by uniform rejection sampling over free
/// cells, keeping only distinct pairs connected on the finest lattice.
/// `align_level` restricts samples to the centers of that ladder level
/// (0, the default, samples every fine cell). Deterministic in `seed`.
inline std::vector<Scenario> gen_scenarios(const GridMap& map, const std::string& map_id,
                                           std::size_t count, std::uint64_t seed,
                                           const ResolutionLadder& ladder,
                                           std::size_t align_level = 0)
{
  if (align_level >= ladder.size()) throw ConfigError("align level outside the ladder");
  if (map.free_count() < 2) throw GenerationError("map '" + map_id + "' has fewer than 2 free cells");

  const int k = ladder.multiplier(align_level);
  const int offset = (k - 1) / 2;
  auto lattice_count = [&](int extent) { return extent > offset ? (extent - offset + k - 1) / k : 0; };
  const int nx = lattice_count(map.width());
  const int ny = lattice_count(map.height());
  const int nz = map.dims() == 3 ? lattice_count(map.depth()) : 1;
  if (nx == 0 || ny == 0 || nz == 0)
    throw GenerationError("map '" + map_id + "' is smaller than one cell at multiplier " +
                          std::to_string(k));

  const auto label = connected_components(map);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> px(0, nx - 1), py(0, ny - 1), pz(0, nz - 1);
  auto draw = [&]() -> Cell {
    const int x = px(rng), y = py(rng), z = pz(rng);
    return {offset + k * x, offset + k * y, map.dims() == 3 ? offset + k * z : 0};
  };

  std::vector<Scenario> out;
  out.reserve(count);
  for (std::uint64_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= kMaxScenarioAttempts)
      throw GenerationError("could not find " + std::to_string(count) +
                            " connected start/goal pairs on map '" + map_id + "' in " +
                            std::to_string(kMaxScenarioAttempts) + " attempts");
    const Cell start = draw();
    const Cell goal = draw();
    if (start == goal || map.blocked(start) || map.blocked(goal)) continue;
    if (label[map.id(start)] != label[map.id(goal)]) continue;
    out.push_back({map_id, out.size(), start, goal, seed});
  }
  return out;
}

inline std::string scenarios_to_csv(const std::vector<Scenario>& scenarios)
{
  std::ostringstream out;
  out << "map,scenario,seed,start_x,start_y,start_z,goal_x,goal_y,goal_z\n";
  for (const auto& s : scenarios)
    out << s.map_id << ',' << s.index << ',' << s.seed << ',' << s.start.x << ',' << s.start.y
        << ',' << s.start.z << ',' << s.goal.x << ',' << s.goal.y << ',' << s.goal.z << '\n';
  return out.str();
}

/// Reads the format written by scenarios_to_csv.
inline std::vector<Scenario> scenarios_from_csv(std::string_view text)
{
  std::vector<Scenario> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string line(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 || line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string item; std::getline(ss, item, ',');) f.push_back(item);
    if (f.size() != 9) throw ParseError(line_no, 0, "expected 9 fields");
    try {
      Scenario s;
      s.map_id = f[0];
      s.index = std::stoull(f[1]);
      s.seed = std::stoull(f[2]);
      s.start = {std::stoi(f[3]), std::stoi(f[4]), std::stoi(f[5])};
      s.goal = {std::stoi(f[6]), std::stoi(f[7]), std::stoi(f[8])};
      out.push_back(std::move(s));
    } catch (const std::logic_error&) {
      throw ParseError(line_no, 0, "bad number");
    }
  }
  return out;
}

} // namespace mra::io
