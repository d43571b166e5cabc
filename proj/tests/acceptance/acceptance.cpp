// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mra/baselines.hpp"
#include "mra/bench.hpp"
#include "mra/io/map_file.hpp"
#include "mra/io/results_csv.hpp"
#include "mra/io/scenarios.hpp"
#include "mra/io/synthetic.hpp"
#include "mra/mra_star.hpp"

using namespace mra;

namespace {

// Counts (state, queue) pairs expanded more than once, over every MRA* run
// the suite performs.
struct RepeatCounter
{
  std::set<std::pair<Cell, std::size_t>> seen;
  std::uint64_t* repeats = nullptr;

  template <class Search>
  void on_iteration(const Search&)
  {
  }
  void on_expand(Cell c, std::size_t q)
  {
    if (!seen.insert({c, q}).second) ++*repeats;
  }
};

struct Tally
{
  std::uint64_t runs = 0;
  std::uint64_t duplicate_expansions = 0;  // engine's closed-bit counter
  std::uint64_t observed_repeats = 0;      // independent observer
};

Tally g_tally;

PlanResult run_mra(const GridMap& map, Cell start, Cell goal, const ResolutionLadder& ladder,
                   const PlannerConfig& cfg = {})
{
  MultiResolutionAStar<RepeatCounter> search(map, ladder, cfg, RepeatCounter{{}, &g_tally.observed_repeats});
  auto r = search.plan(start, goal);
  ++g_tally.runs;
  g_tally.duplicate_expansions += r.duplicate_expansions;
  return r;
}

std::pair<Cell, Cell> random_query(const GridMap& map, std::uint64_t seed)
{
  const auto sc = io::gen_scenarios(map, "m", 1, seed, ResolutionLadder({1}));
  return {sc.front().start, sc.front().goal};
}

int g_failures = 0;
std::map<int, std::string> g_lines;  // printed in criterion order at the end

void report(int id, bool pass, const std::string& what, const std::string& detail)
{
  g_lines[id] = "criterion " + std::to_string(id) + ": " + (pass ? "PASS" : "FAIL") + "  " + what + "  [" + detail + "]";
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, auto... args)
{
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. Bound suite.
void bound_suite()
{
  const PlannerConfig cfg;  // w1 = w2 = 3
  std::size_t solved = 0, unsolved = 0, violations = 0, instances = 0;
  double worst_ratio = 0.0;
  auto check = [&](const GridMap& map, Cell s, Cell g, const ResolutionLadder& ladder) {
    ++instances;
    const auto r = run_mra(map, s, g, ladder, cfg);
    if (!r.solved()) {
      ++unsolved;
      return;
    }
    ++solved;
    const double opt = dijkstra_optimal(map, s, g);
    worst_ratio = std::max(worst_ratio, opt > 0 ? r.cost / opt : 1.0);
    if (r.cost > cfg.w2 * opt * (1.0 + 1e-9)) ++violations;
  };

  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t m = 0; m < 200; ++m) {
    const GridMap map = io::random_map(64, 64, 0.3, 10'000 + m);
    const auto [s, g] = random_query(map, m);
    check(map, s, g, ResolutionLadder({1, 7, 21}));
  }
  for (std::uint64_t m = 0; m < 50; ++m) {
    const GridMap map = io::random_map(24, 24, 24, 0.3, 20'000 + m);
    const auto [s, g] = random_query(map, m);
    check(map, s, g, ResolutionLadder({1, 9, 27}));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(1, violations == 0 && unsolved == 0 && secs < 120.0,
         "cost <= 3 x Dijkstra optimum on 200 2D + 50 3D random maps",
         fmt("%zu/%zu solved, %zu violations, worst ratio %.4f, %.1f s", solved, instances, violations,
             worst_ratio, secs));
}

// 2. Anchor-only ladder reproduces the oracle bit for bit.
void anchor_suite()
{
  std::size_t equal = 0;
  for (std::uint64_t m = 0; m < 100; ++m) {
    const GridMap map = io::random_map(64, 64, 0.3, 30'000 + m);
    const auto [s, g] = random_query(map, m);
    const auto r = run_mra(map, s, g, ResolutionLadder({1}));
    if (r.solved() && r.cost == dijkstra_optimal(map, s, g)) ++equal;
  }
  report(2, equal == 100, "ladder [1] cost bitwise equal to Dijkstra on 100 instances",
         fmt("%zu/100 equal", equal));
}

// 3. Narrow corridors.
void corridor_suite()
{
  std::size_t mra_solved = 0, wa_solved = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = io::corridor_map(seed);
    mra_solved += run_mra(inst.map, inst.start, inst.goal, ResolutionLadder({1, 7})).solved();
    wa_solved += weighted_astar(inst.map, inst.start, inst.goal, 7, 3.0).solved();
  }
  report(3, mra_solved == 50 && wa_solved == 0,
         "corridor maps: MRA* [1,7] solves all, WA* at multiplier 7 solves none",
         fmt("MRA* %zu/50, WA*(k=7) %zu/50", mra_solved, wa_solved));
}

// 4. Cul-de-sac local minima.
void culdesac_suite()
{
  std::size_t wins = 0;
  double mra_exp = 0, wa_exp = 0;
  for (std::uint64_t seed = 1000; seed < 1050; ++seed) {
    const auto inst = io::culdesac_map(seed);
    const auto a = run_mra(inst.map, inst.start, inst.goal, ResolutionLadder({1, 7, 21}));
    const auto b = weighted_astar(inst.map, inst.start, inst.goal, 1, 3.0);
    mra_exp += static_cast<double>(a.total_expansions());
    wa_exp += static_cast<double>(b.total_expansions());
    if (a.solved() && a.total_expansions() < b.total_expansions()) ++wins;
  }
  report(4, wins >= 40, "cul-de-sac maps: MRA* expands fewer states than WA*(k=1, w=3) in >= 80%",
         fmt("%zu/50 fewer, mean expansions %.0f vs %.0f", wins, mra_exp / 50, wa_exp / 50));
}

// 6. Union branching in 3D.
void branching_suite()
{
  const ResolutionLadder ladder({1, 9, 27});
  std::size_t max_random = 0;
  for (std::uint64_t m = 0; m < 50; ++m) {
    const GridMap map = io::random_map(24, 24, 24, 0.3, 20'000 + m);
    const auto [s, g] = random_query(map, m);
    max_random = std::max(max_random, wa_union(map, s, g, ladder, 3.0).max_branching);
  }
  const GridMap free_map(81, 81, 81);
  const Cell center{40, 40, 40};
  const auto r = wa_union(free_map, center, {13, 13, 13}, ladder, 3.0);
  std::set<Cell> moves;
  for (std::size_t i = 0; i < ladder.size(); ++i)
    for (const auto& s : successors(free_map, ladder, center, i)) moves.insert(s.cell);
  const bool pass = max_random <= 78 && r.max_branching == 78 && moves.size() == 78;
  report(6, pass, "WA-MR 3D [1,9,27]: at most 78 successors, exactly 78 at a coincident interior state",
         fmt("max on random maps %zu, max on free 81^3 %zu, distinct moves at (40,40,40) %zu", max_random,
             r.max_branching, moves.size()));
}

// 7. Weight sweeps on the cul-de-sac set.
void sweep_suite()
{
  std::vector<bench::NamedMap> maps;
  std::vector<io::Scenario> scenarios;
  for (std::uint64_t seed = 1000; seed < 1050; ++seed) {
    auto inst = io::culdesac_map(seed);
    const std::string id = "culdesac_" + std::to_string(seed);
    scenarios.push_back({id, 0, inst.start, inst.goal, seed});
    maps.push_back({id, std::move(inst.map)});
  }
  bench::BenchConfig cfg;
  cfg.ladder = ResolutionLadder({1, 7, 21});
  cfg.repeats = 21;

  // Sub-millisecond runs: each point is the minimum of the mean over three
  // full passes, each run timed as the minimum of 21 repeats.
  auto sweep = [&](bench::SweepParam param, const std::vector<double>& values) {
    auto best = bench::run_sweep(maps, scenarios, cfg, param, values, 3.0);
    for (int pass = 1; pass < 3; ++pass) {
      const auto again = bench::run_sweep(maps, scenarios, cfg, param, values, 3.0);
      for (std::size_t i = 0; i < best.size(); ++i)
        best[i].mean_time_s = std::min(best[i].mean_time_s, again[i].mean_time_s);
    }
    return best;
  };
  const auto w2 = sweep(bench::SweepParam::w2, {1, 2, 3, 5, 10});
  const auto w1 = sweep(bench::SweepParam::w1, {1, 1.5, 2, 3, 5, 10});

  std::size_t inversions = 0;
  bool small = true;
  std::string w2_times;
  for (std::size_t i = 0; i < w2.size(); ++i) {
    w2_times += fmt("%s%g:%.3fms", i ? " " : "", w2[i].value, 1e3 * w2[i].mean_time_s);
    if (i && w2[i].mean_time_s > w2[i - 1].mean_time_s) {
      ++inversions;
      small = small && w2[i].mean_time_s <= 1.05 * w2[i - 1].mean_time_s;
    }
  }
  double min_w1 = w1.front().mean_time_s;
  std::string w1_times;
  for (std::size_t i = 0; i < w1.size(); ++i) {
    min_w1 = std::min(min_w1, w1[i].mean_time_s);
    w1_times += fmt("%s%g:%.3fms", i ? " " : "", w1[i].value, 1e3 * w1[i].mean_time_s);
  }
  bool all_solved = true;
  for (const auto* sweep : {&w2, &w1})
    for (const auto& row : *sweep) all_solved = all_solved && row.solved == row.runs;

  const bool w2_ok = inversions == 0 || (inversions == 1 && small);
  const bool w1_ok = w1.back().mean_time_s > min_w1;
  report(7, w2_ok && w1_ok && all_solved,
         "mean time non-increasing in w2; w1 sweep slows down past its minimum",
         fmt("w2 {%s} inversions %zu; w1 {%s}", w2_times.c_str(), inversions, w1_times.c_str()));
}

// 8. Heuristic consistency, exhaustively on five 32 x 32 maps. Costs are
// formed from step counts and rounded once, like every path cost.
void heuristic_suite()
{
  std::size_t checks = 0, violations = 0;
  for (std::uint64_t m = 0; m < 5; ++m) {
    const GridMap map = io::random_map(32, 32, 0.3, 40'000 + m);
    const auto [unused, goal] = random_query(map, m);
    const auto dist = dijkstra_distances(map, goal);
    for (int y = 0; y < 32; ++y)
      for (int x = 0; x < 32; ++x) {
        const Cell a{x, y, 0};
        if (map.blocked(a)) continue;
        const double ha = heuristic(a, goal, HeuristicKind::octile);
        ++checks;
        if (!(ha <= dist[map.id(a)])) ++violations;
        if (ha != detail::canonical_length(octile_steps(a, goal))) ++violations;
        for (const auto& s : successors(map, ResolutionLadder({1}), a, 0)) {
          auto rhs = octile_steps(s.cell, goal);
          ++rhs[detail::nonzero_axes(s.cell - a)];
          ++checks;
          if (!(ha <= detail::canonical_length(rhs))) ++violations;
        }
      }
  }
  report(8, violations == 0, "h(a) <= c(a,b) + h(b) and h(s) <= d*(s) on all free cells of five 32x32 maps",
         fmt("%zu checks, %zu violations", checks, violations));
}

// 9. Bench determinism, modulo the time_s column.
std::string strip_time(const std::string& csv)
{
  std::istringstream in(csv);
  std::string out, line;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string item; std::getline(ss, item, ',');) f.push_back(item);
    if (line.back() == ',') f.emplace_back();
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ',';
      if (i != 5) out += f[i];
    }
    out += '\n';
  }
  return out;
}

std::vector<io::ResultRow> g_bench_rows;

void determinism_suite()
{
  std::vector<bench::NamedMap> maps;
  for (std::uint64_t m = 0; m < 10; ++m)
    maps.push_back({"random_" + std::to_string(m), io::random_map(64, 64, 0.3, 50'000 + m)});
  bench::BenchConfig cfg;
  cfg.ladder = ResolutionLadder({1, 7, 21});
  cfg.algos = bench::parse_algos("mra,wa-high,wa-low,wa-mr,astar", cfg.ladder);
  cfg.scenarios = 5;
  cfg.seed = 9;
  cfg.planner.policy = PolicyKind::dts;
  cfg.planner.seed = 9;

  const auto dir = std::filesystem::temp_directory_path() / "mra_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<std::string> files;
  for (const std::size_t threads : {1, 1, 4}) {
    cfg.threads = threads;
    const auto rows = bench::run_bench(maps, cfg);
    const auto path = dir / ("run_" + std::to_string(files.size()) + ".csv");
    io::write_results_csv(path, rows);
    files.push_back(io::read_file(path));
    g_bench_rows.insert(g_bench_rows.end(), rows.begin(), rows.end());
  }
  const bool same = strip_time(files[0]) == strip_time(files[1]) && strip_time(files[0]) == strip_time(files[2]);
  report(9, same, "repeated bench runs give identical CSVs except time_s",
         fmt("3 runs (1, 1 and 4 workers), %zu rows each, identical: %s",
             g_bench_rows.size() / 3, same ? "yes" : "no"));
}

// 5. Every MRA* run above, including the bench rows.
void once_per_queue_suite()
{
  std::uint64_t bench_dups = 0, bench_runs = 0;
  for (const auto& r : g_bench_rows)
    if (r.algo == "mra") {
      ++bench_runs;
      bench_dups += r.duplicate_expansions;
    }
  const bool pass = g_tally.duplicate_expansions == 0 && g_tally.observed_repeats == 0 && bench_dups == 0;
  report(5, pass, "no (state, queue) pair expanded twice across the suite",
         fmt("%llu direct runs + %llu bench runs; closed-bit counter %llu, observer %llu, bench %llu",
             static_cast<unsigned long long>(g_tally.runs), static_cast<unsigned long long>(bench_runs),
             static_cast<unsigned long long>(g_tally.duplicate_expansions),
             static_cast<unsigned long long>(g_tally.observed_repeats),
             static_cast<unsigned long long>(bench_dups)));
}

} // namespace

int main()
{
  const std::vector<std::pair<const char*, std::function<void()>>> suites = {
    {"bound", bound_suite},         {"anchor", anchor_suite},       {"corridor", corridor_suite},
    {"culdesac", culdesac_suite},   {"branching", branching_suite}, {"sweep", sweep_suite},
    {"heuristic", heuristic_suite}, {"determinism", determinism_suite},
  };
  for (const auto& [name, run] : suites) {
    try {
      run();
    } catch (const std::exception& e) {
      std::printf("suite %s aborted: %s\n", name, e.what());
      ++g_failures;
    }
  }
  once_per_queue_suite();
  for (const auto& [id, line] : g_lines) std::printf("%s\n", line.c_str());
  std::printf("%s: %d criterion failure(s)\n", g_failures ? "FAILED" : "ALL PASSED", g_failures);
  return g_failures ? 1 : 0;
}
