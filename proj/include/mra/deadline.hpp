#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>

namespace mra {

/// Wall-clock budget for one query. The clock is read at most once per
/// `cadence` expansions.
template <class Clock = std::chrono::steady_clock>
class DeadlineChecker
{
public:
  static constexpr std::uint64_t kDefaultCadence = 1000;

  DeadlineChecker(double timeout_s, typename Clock::time_point started_at,
                  std::uint64_t cadence = kDefaultCadence)
    : timeout_s_(timeout_s), started_at_(started_at), cadence_(cadence)
  {
  }

  /// True iff the budget is exhausted as of the latest clock read. Only
  /// reads the clock once `cadence` expansions have passed since the last read.
  bool expired(std::uint64_t expansions)
  {
    if (std::isinf(timeout_s_)) return false;
    if (expansions - last_checked_ < cadence_) return false;
    last_checked_ = expansions;
    ++clock_reads_;
    const std::chrono::duration<double> elapsed = Clock::now() - started_at_;
    return elapsed.count() > timeout_s_;
  }

  std::uint64_t clock_reads() const noexcept { return clock_reads_; }

private:
  double timeout_s_;
  typename Clock::time_point started_at_;
  std::uint64_t cadence_;
  std::uint64_t last_checked_ = 0;
  std::uint64_t clock_reads_ = 0;
};

} // namespace mra
