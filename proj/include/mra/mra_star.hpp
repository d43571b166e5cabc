#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mra/deadline.hpp"
#include "mra/grid_map.hpp"
#include "mra/open_list.hpp"
#include "mra/plan_types.hpp"
#include "mra/policies.hpp"
#include "mra/resolution_ladder.hpp"
#include "mra/spaces.hpp"

namespace mra {

/// Priority of a state in queue i: g + h for the anchor (i = 0), g + w1 * h
/// for every inadmissible queue.
inline double key(double g, double h, std::size_t queue, double w1) noexcept
{
  return queue == 0 ? g + h : g + w1 * h;
}

/// Search instrumentation hooks. on_iteration fires at the top of every main
/// loop iteration, before the queue choice; on_expand right before a state is
/// expanded.
struct NullObserver
{
  template <class Search>
  void on_iteration(const Search&)
  {
  }
  void on_expand(Cell, std::size_t) {}
};

/// Multi-resolution A*.
///
/// One weighted-A* queue per inadmissible resolution level plus an anchor A*
/// queue on the finest lattice. All queues share a single g/bp table: a state
/// generated by any queue is pushed into every queue whose lattice it lies on
/// and in which it is not yet closed. An inadmissible queue may only expand
/// while its min key is within w2 of the anchor's, which bounds the returned
/// cost by w2 times the finest-lattice optimum.
///
/// Not reentrant: one query at a time per instance.
template <class Observer = NullObserver>
class MultiResolutionAStar
{
public:
  struct Node
  {
    double g = kInfinity;
    double h = 0.0;
    std::optional<StateId> bp;
    QueueMask closed;
  };

  MultiResolutionAStar(const GridMap& map, ResolutionLadder ladder, PlannerConfig config,
                       Observer observer = {})
    : map_(map),
      ladder_(std::move(ladder)),
      config_(config),
      heuristic_kind_(default_heuristic(map.dims())),
      scheduler_(config.policy, ladder_.size(), config.seed),
      observer_(std::move(observer))
  {
    config_.validate();
  }

  PlanResult plan(Cell start, Cell goal)
  {
    using Clock = std::chrono::steady_clock;
    const auto started = Clock::now();
    reset(start, goal);
    DeadlineChecker<Clock> deadline(config_.timeout_s, started);

    std::optional<PlanStatus> status;
    while (!status) {
      if (deadline.expired(total_expansions())) {
        status = PlanStatus::timeout;
        break;
      }
      status = step();
    }

    PlanResult result = finish(*status);
    result.wall_time_s = std::chrono::duration<double>(Clock::now() - started).count();
    return result;
  }

  /// Clears all search state and seeds start into every queue it coincides with.
  void reset(Cell start, Cell goal)
  {
    require_free(map_, start, "start");
    require_free(map_, goal, "goal");
    start_ = map_.id(start);
    goal_ = map_.id(goal);
    goal_cell_ = goal;
    nodes_.clear();
    open_.assign(ladder_.size(), OpenList{});
    expansions_.assign(ladder_.size(), 0);
    scheduler_ = QueueScheduler(config_.policy, ladder_.size(), config_.seed);
    duplicate_expansions_ = 0;
    max_branching_ = 0;
    winning_queue_.reset();
    trace_.clear();

    Node& s = node_for(start_);
    s.g = 0.0;
    node_for(goal_);
    insert_where_open(start_, s);
  }

  /// One iteration of the main loop. Returns a status once the search ends.
  std::optional<PlanStatus> step()
  {
    if (all_empty()) return PlanStatus::exhausted;
    observer_.on_iteration(*this);

    const std::size_t i = choose_queue();
    const double anchor_bound = config_.w2 * open_[0].min_key();
    const double goal_g = goal_g_value();

    if (open_[i].min_key() <= anchor_bound) {
      if (goal_g <= open_[i].min_key()) {
        winning_queue_ = i;
        return PlanStatus::solved;
      }
      pop_and_expand(i);
      if (i != 0)
        scheduler_.update(i, open_[i].empty() ? kInfinity : nodes_.at(open_[i].top().id).h);
    } else {
      if (goal_g <= anchor_bound) {
        winning_queue_ = 0;
        return PlanStatus::solved;
      }
      pop_and_expand(0);
    }
    return std::nullopt;
  }

  /// Partial expansion of s with queue i's action set. Improved successors are
  /// pushed into every queue whose lattice they lie on, unless closed there.
  void expand_state(StateId s, std::size_t i)
  {
    const Cell cell = map_.cell(s);
    observer_.on_expand(cell, i);
    if (config_.record_trace) trace_.push_back({cell, i});

    const double g = nodes_.at(s).g;
    scratch_.clear();
    successors(map_, ladder_, cell, i, scratch_);
    max_branching_ = std::max(max_branching_, scratch_.size());
    for (const Successor& succ : scratch_) {
      const StateId id = map_.id(succ.cell);
      Node& n = node_for(id);
      const double candidate = g + succ.cost;
      if (n.g > candidate) {
        n.g = candidate;
        n.bp = s;
        insert_where_open(id, n);
      }
    }
  }

  /// Start-to-goal cells by following back-pointers from goal.
  std::vector<Cell> reconstruct_path(Cell goal) const
  {
    std::vector<Cell> path;
    std::optional<StateId> at = map_.id(goal);
    if (nodes_.count(*at) == 0 || !(nodes_.at(*at).g < kInfinity))
      throw std::logic_error("reconstruct_path: goal was never reached");
    while (at) {
      path.push_back(map_.cell(*at));
      if (path.size() > nodes_.size())
        throw std::logic_error("reconstruct_path: back-pointer cycle");
      at = nodes_.at(*at).bp;
    }
    if (path.back() != map_.cell(start_))
      throw std::logic_error("reconstruct_path: back-pointer chain does not reach start");
    return {path.rbegin(), path.rend()};
  }

  double key_of(const Node& n, std::size_t i) const noexcept { return key(n.g, n.h, i, config_.w1); }

  const Node* node(Cell c) const
  {
    const auto it = nodes_.find(map_.id(c));
    return it == nodes_.end() ? nullptr : &it->second;
  }

  const OpenList& open(std::size_t i) const { return open_.at(i); }
  std::size_t num_queues() const noexcept { return open_.size(); }
  const QueueScheduler& scheduler() const noexcept { return scheduler_; }
  const ResolutionLadder& ladder() const noexcept { return ladder_; }
  const GridMap& map() const noexcept { return map_; }
  const PlannerConfig& config() const noexcept { return config_; }
  Observer& observer() noexcept { return observer_; }
  double goal_g_value() const { return nodes_.at(goal_).g; }

  std::uint64_t total_expansions() const noexcept
  {
    std::uint64_t n = 0;
    for (auto e : expansions_) n += e;
    return n;
  }

private:
  Node& node_for(StateId id)
  {
    auto [it, inserted] = nodes_.try_emplace(id);
    if (inserted) it->second.h = heuristic(map_.cell(id), goal_cell_, heuristic_kind_);
    return it->second;
  }

  void insert_where_open(StateId id, const Node& n)
  {
    const QueueMask spaces = space_mask(map_.cell(id), ladder_, map_.dims());
    for (std::size_t j = 0; j < ladder_.size(); ++j)
      if (spaces.test(j) && !n.closed.test(j)) open_[j].push_or_update(id, key_of(n, j), n.g);
  }

  bool all_empty() const noexcept
  {
    for (const auto& q : open_)
      if (!q.empty()) return false;
    return true;
  }

  /// Among nonempty inadmissible queues per the policy; the anchor when all
  /// of those are empty.
  std::size_t choose_queue()
  {
    nonempty_.clear();
    for (std::size_t j = 1; j < open_.size(); ++j)
      if (!open_[j].empty()) nonempty_.push_back(j);
    if (nonempty_.empty()) return 0;
    return scheduler_.choose(nonempty_);
  }

  void pop_and_expand(std::size_t i)
  {
    const StateId s = open_[i].pop().id;
    Node& n = nodes_.at(s);
    if (n.closed.test(i)) ++duplicate_expansions_;
    ++expansions_[i];
    expand_state(s, i);
    nodes_.at(s).closed.set(i);
  }

  PlanResult finish(PlanStatus status)
  {
    PlanResult r;
    r.status = status;
    r.expansions = expansions_;
    r.generated = nodes_.size();
    r.duplicate_expansions = duplicate_expansions_;
    r.max_branching = max_branching_;
    r.trace = std::move(trace_);
    if (status == PlanStatus::solved) {
      r.path = reconstruct_path(goal_cell_);
      r.cost = path_cost(r.path);
      r.winning_queue = winning_queue_;
    }
    return r;
  }

  const GridMap& map_;
  ResolutionLadder ladder_;
  PlannerConfig config_;
  HeuristicKind heuristic_kind_;
  QueueScheduler scheduler_;
  Observer observer_;

  StateId start_ = 0;
  StateId goal_ = 0;
  Cell goal_cell_;
  std::unordered_map<StateId, Node> nodes_;
  std::vector<OpenList> open_;
  std::vector<std::uint64_t> expansions_;
  std::uint64_t duplicate_expansions_ = 0;
  std::size_t max_branching_ = 0;
  std::optional<std::size_t> winning_queue_;
  std::vector<Expansion> trace_;
  std::vector<Successor> scratch_;
  std::vector<std::size_t> nonempty_;
};

/// Runs one multi-resolution query.
inline PlanResult plan(const Problem& problem, const PlannerConfig& config)
{
  MultiResolutionAStar<> search(problem.map, problem.ladder, config);
  return search.plan(problem.start, problem.goal);
}

} // namespace mra
