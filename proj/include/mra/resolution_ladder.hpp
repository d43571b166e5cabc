#pragma once

#include <charconv>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mra/errors.hpp"

namespace mra {

/// Upper bound on anchor + inadmissible queues; closed flags are a fixed bitset.
inline constexpr std::size_t kMaxQueues = 8;

/// Ordered odd multipliers of the finest cell size. Entry 0 is the anchor
/// (multiplier 1). Odd sizes keep every coarse cell center on a fine center.
class ResolutionLadder
{
public:
  explicit ResolutionLadder(std::vector<int> multipliers) : multipliers_(std::move(multipliers))
  {
    if (multipliers_.empty()) throw ConfigError("resolution ladder is empty");
    if (multipliers_.size() > kMaxQueues)
      throw ConfigError("resolution ladder supports at most " + std::to_string(kMaxQueues) +
                        " levels");
    if (multipliers_.front() != 1)
      throw ConfigError("resolution ladder must start with multiplier 1 (the anchor)");
    for (std::size_t i = 0; i < multipliers_.size(); ++i) {
      const int k = multipliers_[i];
      if (k <= 0 || k % 2 == 0)
        throw ConfigError("resolution multiplier " + std::to_string(k) +
                          " is not odd: every multiplier must be an odd positive integer so "
                          "coarse cell centers coincide with fine cell centers");
      if (i > 0 && k <= multipliers_[i - 1])
        throw ConfigError("resolution multipliers must be strictly increasing");
    }
  }

  /// Parses "1,7,21".
  static ResolutionLadder parse(std::string_view text)
  {
    std::vector<int> values;
    while (!text.empty()) {
      const auto comma = text.find(',');
      const auto token = text.substr(0, comma);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
        throw ConfigError("bad resolution multiplier '" + std::string(token) + "'");
      values.push_back(v);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
      if (text.empty()) throw ConfigError("trailing comma in resolution list");
    }
    return ResolutionLadder(std::move(values));
  }

  std::size_t size() const noexcept { return multipliers_.size(); }
  int multiplier(std::size_t i) const { return multipliers_.at(i); }
  int coarsest() const noexcept { return multipliers_.back(); }
  std::span<const int> multipliers() const noexcept { return multipliers_; }

  std::string to_string() const
  {
    std::string s;
    for (std::size_t i = 0; i < multipliers_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(multipliers_[i]);
    }
    return s;
  }

  friend bool operator==(const ResolutionLadder&, const ResolutionLadder&) = default;

private:
  std::vector<int> multipliers_;
};

} // namespace mra
