#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mra/errors.hpp"

namespace mra {

enum class PolicyKind
{
  round_robin,
  dts
};

inline PolicyKind parse_policy(std::string_view s)
{
  if (s == "rr" || s == "round_robin") return PolicyKind::round_robin;
  if (s == "dts") return PolicyKind::dts;
  throw ConfigError("unknown policy '" + std::string(s) + "' (expected rr or dts)");
}

inline const char* to_string(PolicyKind k) noexcept
{
  return k == PolicyKind::round_robin ? "rr" : "dts";
}

/// Chooses which inadmissible queue (indices 1..n) to serve next.
///
/// Round robin cycles through the nonempty queues. Dynamic Thompson Sampling
/// treats each queue as a Bernoulli bandit with a Beta(alpha, beta) posterior;
/// a queue is rewarded when the heuristic of its top state drops below the
/// best value seen at that queue's top. The posterior is capped at
/// alpha + beta = C so old evidence decays.
class QueueScheduler
{
public:
  static constexpr double kDefaultCap = 10.0;

  QueueScheduler(PolicyKind kind, std::size_t num_queues, std::uint64_t seed,
                 double cap = kDefaultCap)
    : kind_(kind),
      alpha_(num_queues, 1.0),
      beta_(num_queues, 1.0),
      best_h_(num_queues, std::numeric_limits<double>::infinity()),
      cap_(cap),
      rng_(seed)
  {
  }

  PolicyKind kind() const noexcept { return kind_; }

  /// nonempty must be sorted ascending and contain only inadmissible indices.
  std::size_t choose(std::span<const std::size_t> nonempty)
  {
    if (nonempty.empty()) throw std::logic_error("choose_queue called with no nonempty queue");
    if (kind_ == PolicyKind::round_robin) {
      std::size_t pick = nonempty.front();
      for (const std::size_t q : nonempty)
        if (q >= cursor_) {
          pick = q;
          break;
        }
      cursor_ = pick + 1;
      return pick;
    }
    std::size_t pick = nonempty.front();
    double best = -1.0;
    for (const std::size_t q : nonempty) {
      const double theta = sample_beta(alpha_[q], beta_[q]);
      if (theta > best) {
        best = theta;
        pick = q;
      }
    }
    return pick;
  }

  /// Feeds back the heuristic of queue i's new top state after serving it
  /// (infinity if the queue ran empty). No-op for round robin.
  void update(std::size_t i, double new_top_h)
  {
    if (kind_ != PolicyKind::dts) return;
    double reward = 0.0;
    if (new_top_h < best_h_[i]) {
      best_h_[i] = new_top_h;
      reward = 1.0;
    }
    if (alpha_[i] + beta_[i] < cap_) {
      alpha_[i] += reward;
      beta_[i] += 1.0 - reward;
    } else {
      const double shrink = cap_ / (cap_ + 1.0);
      alpha_[i] = (alpha_[i] + reward) * shrink;
      beta_[i] = (beta_[i] + 1.0 - reward) * shrink;
    }
  }

  double alpha(std::size_t i) const { return alpha_.at(i); }
  double beta(std::size_t i) const { return beta_.at(i); }
  double best_h(std::size_t i) const { return best_h_.at(i); }
  double cap() const noexcept { return cap_; }

  /// Test hook: seed the posterior of one queue.
  void set_posterior(std::size_t i, double alpha, double beta)
  {
    alpha_.at(i) = alpha;
    beta_.at(i) = beta;
  }

private:
  double sample_beta(double a, double b)
  {
    std::gamma_distribution<double> ga(a, 1.0);
    std::gamma_distribution<double> gb(b, 1.0);
    const double x = ga(rng_);
    const double y = gb(rng_);
    return x + y > 0.0 ? x / (x + y) : 0.5;
  }

  PolicyKind kind_;
  std::size_t cursor_ = 1;
  std::vector<double> alpha_;
  std::vector<double> beta_;
  std::vector<double> best_h_;
  double cap_;
  std::mt19937_64 rng_;
};

} // namespace mra
