#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "mra/io/map_file.hpp"
#include "mra/plan_types.hpp"

namespace mra::io {

enum class RunStatus
{
  solved,
  exhausted,
  timeout,
  invalid  ///< the algorithm rejected the query (e.g. start off its lattice)
};

inline const char* to_string(RunStatus s) noexcept
{
  switch (s) {
  case RunStatus::solved: return "solved";
  case RunStatus::exhausted: return "exhausted";
  case RunStatus::timeout: return "timeout";
  case RunStatus::invalid: return "invalid";
  }
  return "?";
}

inline RunStatus to_run_status(PlanStatus s) noexcept
{
  switch (s) {
  case PlanStatus::solved: return RunStatus::solved;
  case PlanStatus::exhausted: return RunStatus::exhausted;
  case PlanStatus::timeout: return RunStatus::timeout;
  }
  return RunStatus::invalid;
}

/// One (algorithm, scenario) run.
struct ResultRow
{
  std::string map;
  std::string algo;
  std::size_t scenario = 0;
  std::uint64_t seed = 0;
  RunStatus status = RunStatus::invalid;
  double time_s = 0.0;
  double cost = 0.0;
  std::vector<std::uint64_t> expansions;
  std::size_t path_len = 0;
  std::uint64_t duplicate_expansions = 0;

  std::uint64_t expansions_total() const noexcept
  {
    std::uint64_t n = 0;
    for (auto e : expansions) n += e;
    return n;
  }
};

inline std::string format_fixed6(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline constexpr const char* kResultsHeader =
  "map,algo,scenario,seed,status,time_s,cost,expansions_total,expansions_per_queue,path_len";

inline std::string results_to_csv(const std::vector<ResultRow>& rows)
{
  std::string out = std::string(kResultsHeader) + "\n";
  for (const auto& r : rows) {
    out += r.map + ',' + r.algo + ',' + std::to_string(r.scenario) + ',' + std::to_string(r.seed) +
           ',' + to_string(r.status) + ',' + format_fixed6(r.time_s) + ',';
    if (r.status == RunStatus::solved) out += format_fixed6(r.cost);
    out += ',' + std::to_string(r.expansions_total()) + ',';
    for (std::size_t i = 0; i < r.expansions.size(); ++i) {
      if (i) out += '|';
      out += std::to_string(r.expansions[i]);
    }
    out += ',' + std::to_string(r.path_len) + '\n';
  }
  return out;
}

inline void write_results_csv(const std::filesystem::path& path, const std::vector<ResultRow>& rows)
{
  write_file_atomic(path, results_to_csv(rows));
}

} // namespace mra::io
