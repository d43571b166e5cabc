#pragma once

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>

#include "mra/errors.hpp"
#include "mra/grid_map.hpp"
#include "mra/io/text_lines.hpp"

namespace mra::io {

/// MovingAI `.map` files:
///
///     type octile
///     height H
///     width W
///     map
///     <H rows of W glyphs>
///
/// `.`, `G`, `S` are passable; `@`, `O`, `T`, `W` are blocked. Swamp is
/// treated as plain free space and water as an obstacle. File row 0 is y = 0.
inline GridMap parse_movingai_map(std::string_view text)
{
  const auto lines = detail::split_lines(text);
  auto header_value = [&](std::size_t idx, std::string_view name) -> int {
    if (idx >= lines.size()) throw ParseError(idx + 1, 0, "missing '" + std::string(name) + "' line");
    const auto words = detail::split_words(lines[idx]);
    if (words.size() != 2 || words[0] != name)
      throw ParseError(idx + 1, 1, "expected '" + std::string(name) + " <N>'");
    int v = 0;
    const auto [p, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), v);
    if (ec != std::errc{} || p != words[1].data() + words[1].size() || v <= 0)
      throw ParseError(idx + 1, static_cast<std::size_t>(words[1].data() - lines[idx].data()) + 1,
                       "bad value for '" + std::string(name) + "'");
    return v;
  };

  if (lines.empty()) throw ParseError(1, 0, "empty map file");
  {
    const auto words = detail::split_words(lines[0]);
    if (words.size() != 2 || words[0] != "type")
      throw ParseError(1, 1, "expected 'type octile'");
    if (words[1] != "octile") throw ParseError(1, 6, "unsupported map type '" + std::string(words[1]) + "'");
  }
  const int height = header_value(1, "height");
  const int width = header_value(2, "width");
  if (lines.size() < 4 || detail::split_words(lines[3]).size() != 1 ||
      detail::split_words(lines[3])[0] != "map")
    throw ParseError(4, 1, "expected 'map'");

  std::size_t last = lines.size();
  while (last > 4 && lines[last - 1].empty()) --last;
  const std::size_t rows = last - 4;
  if (rows > static_cast<std::size_t>(height))
    throw ParseError(4 + static_cast<std::size_t>(height) + 1, 0,
                     "row " + std::to_string(height + 1) + " exceeds the declared height " +
                       std::to_string(height));
  if (rows < static_cast<std::size_t>(height))
    throw ParseError(last + 1, 0,
                     "map has " + std::to_string(rows) + " rows, expected " + std::to_string(height));

  GridMap map(width, height);
  for (int y = 0; y < height; ++y) {
    const std::size_t line_no = 4 + static_cast<std::size_t>(y);
    const auto row = lines[line_no];
    if (row.size() != static_cast<std::size_t>(width))
      throw ParseError(line_no + 1, std::min(row.size(), static_cast<std::size_t>(width)) + 1,
                       "row has " + std::to_string(row.size()) + " cells, expected " +
                         std::to_string(width));
    for (int x = 0; x < width; ++x) {
      switch (row[static_cast<std::size_t>(x)]) {
      case '.':
      case 'G':
      case 'S': break;
      case '@':
      case 'O':
      case 'T':
      case 'W': map.set_blocked({x, y, 0}); break;
      default:
        throw ParseError(line_no + 1, static_cast<std::size_t>(x) + 1,
                         std::string("unknown glyph '") + row[static_cast<std::size_t>(x)] + "'");
      }
    }
  }
  return map;
}

/// Canonical form: `.` free, `@` blocked.
inline std::string serialize_movingai_map(const GridMap& map)
{
  if (map.dims() != 2) throw InputError("MovingAI maps are 2D");
  std::string out = "type octile\nheight " + std::to_string(map.height()) + "\nwidth " +
                    std::to_string(map.width()) + "\nmap\n";
  out.reserve(out.size() + map.size() + static_cast<std::size_t>(map.height()));
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) out += map.blocked({x, y, 0}) ? '@' : '.';
    out += '\n';
  }
  return out;
}

} // namespace mra::io
