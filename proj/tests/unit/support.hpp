#pragma once

#include <initializer_list>
#include <string_view>

#include "mra/grid_map.hpp"

namespace mra::test {

/// 2D map from rows of '.' (free) and '#' (blocked); row 0 is y = 0.
inline GridMap ascii_map(std::initializer_list<std::string_view> rows)
{
  const int h = static_cast<int>(rows.size());
  const int w = static_cast<int>(rows.begin()->size());
  GridMap map(w, h);
  int y = 0;
  for (std::string_view row : rows) {
    for (int x = 0; x < w; ++x)
      if (row[static_cast<std::size_t>(x)] == '#') map.set_blocked({x, y, 0});
    ++y;
  }
  return map;
}

} // namespace mra::test
