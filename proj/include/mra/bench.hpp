#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "mra/baselines.hpp"
#include "mra/io/results_csv.hpp"
#include "mra/io/scenarios.hpp"
#include "mra/mra_star.hpp"

namespace mra::bench {

enum class AlgoKind
{
  mra,
  wa,
  wa_mr,
  astar
};

struct AlgoSpec
{
  AlgoKind kind = AlgoKind::mra;
  int multiplier = 1;  ///< wa only
  std::string name;
};

/// Names: mra, wa-high, wa-low (coarsest ladder level), wa-mr, astar, wa:K.
inline AlgoSpec parse_algo(std::string_view s, const ResolutionLadder& ladder)
{
  if (s == "mra") return {AlgoKind::mra, 1, "mra"};
  if (s == "wa-high") return {AlgoKind::wa, 1, "wa-high"};
  if (s == "wa-low") return {AlgoKind::wa, ladder.coarsest(), "wa-low"};
  if (s == "wa-mr") return {AlgoKind::wa_mr, 1, "wa-mr"};
  if (s == "astar") return {AlgoKind::astar, 1, "astar"};
  if (s.starts_with("wa:")) {
    const std::string digits(s.substr(3));
    char* end = nullptr;
    const long k = std::strtol(digits.c_str(), &end, 10);
    if (digits.empty() || *end != '\0' || k <= 0 || k % 2 == 0)
      throw ConfigError("bad algorithm '" + std::string(s) +
                        "': the multiplier must be an odd positive integer");
    return {AlgoKind::wa, static_cast<int>(k), std::string(s)};
  }
  throw ConfigError("unknown algorithm '" + std::string(s) +
                    "' (expected mra, wa-high, wa-low, wa-mr, astar or wa:K)");
}

inline std::vector<AlgoSpec> parse_algos(std::string_view list, const ResolutionLadder& ladder)
{
  std::vector<AlgoSpec> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    out.push_back(parse_algo(list.substr(0, comma), ladder));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ConfigError("no algorithms given");
  return out;
}

struct NamedMap
{
  std::string id;
  GridMap map;
};

struct BenchConfig
{
  std::size_t scenarios = 10;
  std::uint64_t seed = 0;
  std::vector<AlgoSpec> algos;
  ResolutionLadder ladder{std::vector<int>{1}};
  PlannerConfig planner;
  double baseline_w = 3.0;
  std::size_t align_level = 0;
  std::size_t threads = 1;
  std::size_t repeats = 1;  ///< time_s is the minimum over this many identical runs
};

/// Worker count from MRA_THREADS (default 1).
inline std::size_t threads_from_env()
{
  if (const char* v = std::getenv("MRA_THREADS")) {
    const long n = std::strtol(v, nullptr, 10);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  return 1;
}

/// Runs one algorithm on one scenario. Queries an algorithm rejects become
/// `invalid` rows.
inline io::ResultRow run_one(const GridMap& map, const io::Scenario& sc, const AlgoSpec& algo,
                             const BenchConfig& cfg, PlanResult* full = nullptr)
{
  io::ResultRow row;
  row.map = sc.map_id;
  row.algo = algo.name;
  row.scenario = sc.index;
  row.seed = sc.seed;

  auto run = [&]() -> PlanResult {
    const BaselineOptions opts{cfg.planner.timeout_s, cfg.planner.record_trace};
    switch (algo.kind) {
    case AlgoKind::mra: {
      MultiResolutionAStar<> search(map, cfg.ladder, cfg.planner);
      return search.plan(sc.start, sc.goal);
    }
    case AlgoKind::wa: return weighted_astar(map, sc.start, sc.goal, algo.multiplier, cfg.baseline_w, opts);
    case AlgoKind::wa_mr: return wa_union(map, sc.start, sc.goal, cfg.ladder, cfg.baseline_w, opts);
    case AlgoKind::astar: return weighted_astar(map, sc.start, sc.goal, 1, 1.0, opts);
    }
    throw std::logic_error("unhandled algorithm kind");
  };

  PlanResult result;
  try {
    result = run();
    for (std::size_t r = 1; r < cfg.repeats; ++r)
      result.wall_time_s = std::min(result.wall_time_s, run().wall_time_s);
  } catch (const InputError&) {
    row.status = io::RunStatus::invalid;
    return row;
  }
  row.status = io::to_run_status(result.status);
  row.time_s = result.wall_time_s;
  row.cost = result.solved() ? result.cost : 0.0;
  row.expansions = result.expansions;
  row.path_len = result.path.size();
  row.duplicate_expansions = result.duplicate_expansions;
  if (full) *full = std::move(result);
  return row;
}

inline bool row_less(const io::ResultRow& a, const io::ResultRow& b)
{
  return std::tie(a.map, a.algo, a.scenario) < std::tie(b.map, b.algo, b.scenario);
}

/// Scenarios for every map, drawn with gen_scenarios from the bench seed.
inline std::vector<io::Scenario> generate_scenarios(const std::vector<NamedMap>& maps,
                                                    const BenchConfig& cfg)
{
  std::vector<io::Scenario> out;
  for (const auto& m : maps) {
    auto s = io::gen_scenarios(m.map, m.id, cfg.scenarios, cfg.seed, cfg.ladder, cfg.align_level);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

/// Every algorithm on every given scenario. Each scenario names its map by
/// id. Rows come back sorted by (map, algo, scenario) regardless of worker
/// count.
inline std::vector<io::ResultRow> run_scenarios(const std::vector<NamedMap>& maps,
                                                const std::vector<io::Scenario>& scenarios,
                                                const BenchConfig& cfg)
{
  struct Job
  {
    const GridMap* map;
    const io::Scenario* scenario;
    const AlgoSpec* algo;
  };
  std::vector<Job> jobs;
  for (const auto& algo : cfg.algos)
    for (const auto& sc : scenarios) {
      const auto m = std::find_if(maps.begin(), maps.end(),
                                  [&](const NamedMap& nm) { return nm.id == sc.map_id; });
      if (m == maps.end()) throw ConfigError("scenario refers to unknown map '" + sc.map_id + "'");
      jobs.push_back({&m->map, &sc, &algo});
    }

  std::vector<io::ResultRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();)
      rows[j] = run_one(*jobs[j].map, *jobs[j].scenario, *jobs[j].algo, cfg);
  };
  const std::size_t n_threads = std::max<std::size_t>(1, std::min(cfg.threads, jobs.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  std::sort(rows.begin(), rows.end(), row_less);
  return rows;
}

inline std::vector<io::ResultRow> run_bench(const std::vector<NamedMap>& maps, const BenchConfig& cfg)
{
  return run_scenarios(maps, generate_scenarios(maps, cfg), cfg);
}

struct SummaryRow
{
  std::string algo;
  std::size_t runs = 0;
  std::size_t solved = 0;
  double success_rate = 0.0;  ///< percent
  std::size_t common = 0;     ///< instances every algorithm solved
  double mean_time_common = 0.0;
  double mean_cost_common = 0.0;
  double mean_expansions_common = 0.0;
  double mean_time_all = 0.0;  ///< over this algorithm's own solved runs
  double mean_cost_all = 0.0;
  double mean_expansions_all = 0.0;
  /// This algorithm's common-set mean divided by MRA*'s; 0 when mra was not run.
  double time_ratio_vs_mra = 0.0;
  double cost_ratio_vs_mra = 0.0;
  double expansions_ratio_vs_mra = 0.0;
};

inline std::vector<SummaryRow> summarize(const std::vector<io::ResultRow>& rows)
{
  using Instance = std::pair<std::string, std::size_t>;
  std::vector<std::string> algos;
  std::map<Instance, std::size_t> solved_by;
  for (const auto& r : rows) {
    if (std::find(algos.begin(), algos.end(), r.algo) == algos.end()) algos.push_back(r.algo);
    if (r.status == io::RunStatus::solved) ++solved_by[{r.map, r.scenario}];
  }
  std::set<Instance> common;
  for (const auto& [inst, n] : solved_by)
    if (n == algos.size()) common.insert(inst);

  std::vector<SummaryRow> out;
  for (const auto& a : algos) {
    SummaryRow s;
    s.algo = a;
    s.common = common.size();
    for (const auto& r : rows) {
      if (r.algo != a) continue;
      ++s.runs;
      if (r.status != io::RunStatus::solved) continue;
      ++s.solved;
      s.mean_time_all += r.time_s;
      s.mean_cost_all += r.cost;
      s.mean_expansions_all += static_cast<double>(r.expansions_total());
      if (common.count({r.map, r.scenario})) {
        s.mean_time_common += r.time_s;
        s.mean_cost_common += r.cost;
        s.mean_expansions_common += static_cast<double>(r.expansions_total());
      }
    }
    s.success_rate = s.runs ? 100.0 * static_cast<double>(s.solved) / static_cast<double>(s.runs) : 0.0;
    if (s.solved) {
      s.mean_time_all /= static_cast<double>(s.solved);
      s.mean_cost_all /= static_cast<double>(s.solved);
      s.mean_expansions_all /= static_cast<double>(s.solved);
    }
    if (s.common) {
      s.mean_time_common /= static_cast<double>(s.common);
      s.mean_cost_common /= static_cast<double>(s.common);
      s.mean_expansions_common /= static_cast<double>(s.common);
    }
    out.push_back(s);
  }

  const auto mra = std::find_if(out.begin(), out.end(), [](const SummaryRow& s) { return s.algo == "mra"; });
  if (mra != out.end() && mra->common) {
    const SummaryRow ref = *mra;
    auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.0; };
    for (auto& s : out) {
      s.time_ratio_vs_mra = ratio(s.mean_time_common, ref.mean_time_common);
      s.cost_ratio_vs_mra = ratio(s.mean_cost_common, ref.mean_cost_common);
      s.expansions_ratio_vs_mra = ratio(s.mean_expansions_common, ref.mean_expansions_common);
    }
  }
  return out;
}

inline std::string format_fixed2(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string summary_to_csv(const std::vector<SummaryRow>& rows)
{
  using io::format_fixed6;
  std::string out =
    "algo,runs,solved,success_rate,common,mean_time_common,mean_cost_common,"
    "mean_expansions_common,mean_time_all,mean_cost_all,mean_expansions_all,"
    "time_ratio_vs_mra,cost_ratio_vs_mra,expansions_ratio_vs_mra\n";
  for (const auto& s : rows) {
    out += s.algo + ',' + std::to_string(s.runs) + ',' + std::to_string(s.solved) + ',' +
           format_fixed2(s.success_rate) + ',' + std::to_string(s.common) + ',' +
           format_fixed6(s.mean_time_common) + ',' + format_fixed6(s.mean_cost_common) + ',' +
           format_fixed6(s.mean_expansions_common) + ',' + format_fixed6(s.mean_time_all) + ',' +
           format_fixed6(s.mean_cost_all) + ',' + format_fixed6(s.mean_expansions_all) + ',' +
           format_fixed6(s.time_ratio_vs_mra) + ',' + format_fixed6(s.cost_ratio_vs_mra) + ',' +
           format_fixed6(s.expansions_ratio_vs_mra) + '\n';
  }
  return out;
}

enum class SweepParam
{
  w1,
  w2
};

struct SweepRow
{
  SweepParam param = SweepParam::w2;
  double value = 0.0;
  double fixed = 0.0;
  std::size_t runs = 0;
  std::size_t solved = 0;
  double mean_time_s = 0.0;
  double mean_cost = 0.0;
  double mean_expansions = 0.0;
};

/// MRA* over the bench scenarios for each value of one weight, the other held
/// at `fixed`. Means are over solved runs.
inline std::vector<SweepRow> run_sweep(const std::vector<NamedMap>& maps,
                                       const std::vector<io::Scenario>& scenarios, BenchConfig cfg,
                                       SweepParam param, const std::vector<double>& values,
                                       double fixed)
{
  cfg.algos = {AlgoSpec{AlgoKind::mra, 1, "mra"}};
  std::vector<SweepRow> out;
  for (const double v : values) {
    cfg.planner.w1 = param == SweepParam::w1 ? v : fixed;
    cfg.planner.w2 = param == SweepParam::w2 ? v : fixed;
    const auto rows = run_scenarios(maps, scenarios, cfg);
    const auto summary = summarize(rows);
    SweepRow s;
    s.param = param;
    s.value = v;
    s.fixed = fixed;
    s.runs = summary.front().runs;
    s.solved = summary.front().solved;
    s.mean_time_s = summary.front().mean_time_all;
    s.mean_cost = summary.front().mean_cost_all;
    s.mean_expansions = summary.front().mean_expansions_all;
    out.push_back(s);
  }
  return out;
}

inline std::string sweep_to_csv(const std::vector<SweepRow>& rows)
{
  using io::format_fixed6;
  std::string out = "param,value,fixed,runs,solved,mean_time_s,mean_cost,mean_expansions\n";
  for (const auto& s : rows)
    out += std::string(s.param == SweepParam::w1 ? "w1" : "w2") + ',' + format_fixed6(s.value) +
           ',' + format_fixed6(s.fixed) + ',' + std::to_string(s.runs) + ',' +
           std::to_string(s.solved) + ',' + format_fixed6(s.mean_time_s) + ',' +
           format_fixed6(s.mean_cost) + ',' + format_fixed6(s.mean_expansions) + '\n';
  return out;
}

} // namespace mra::bench
