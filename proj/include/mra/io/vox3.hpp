#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "mra/errors.hpp"
#include "mra/grid_map.hpp"
#include "mra/io/text_lines.hpp"

namespace mra::io {

/// Plain-text voxel grid:
///
///     vox3 W H D
///     <slice z=0: H rows of W chars from {'.', '#'}>
///     <blank line>
///     <slice z=1> ...
///
/// `#` is blocked.
inline GridMap parse_vox3(std::string_view text)
{
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, 0, "empty vox3 file");
  const auto words = detail::split_words(lines[0]);
  if (words.size() != 4 || words[0] != "vox3") throw ParseError(1, 1, "expected 'vox3 W H D'");
  int ext[3] = {0, 0, 0};
  for (int j = 0; j < 3; ++j) {
    const auto w = words[static_cast<std::size_t>(j) + 1];
    const auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), ext[j]);
    if (ec != std::errc{} || p != w.data() + w.size() || ext[j] <= 0)
      throw ParseError(1, static_cast<std::size_t>(w.data() - lines[0].data()) + 1,
                       "bad extent '" + std::string(w) + "'");
  }
  const int width = ext[0], height = ext[1], depth = ext[2];

  GridMap map(width, height, depth);
  std::size_t at = 1;
  for (int z = 0; z < depth; ++z) {
    if (z > 0) {
      if (at >= lines.size() || !lines[at].empty())
        throw ParseError(at + 1, 0, "expected blank line before slice " + std::to_string(z));
      ++at;
    }
    for (int y = 0; y < height; ++y, ++at) {
      if (at >= lines.size())
        throw ParseError(at + 1, 0,
                         "missing row " + std::to_string(y) + " of slice " + std::to_string(z));
      const auto row = lines[at];
      if (row.size() != static_cast<std::size_t>(width))
        throw ParseError(at + 1, 0,
                         "row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(width));
      for (int x = 0; x < width; ++x) {
        const char ch = row[static_cast<std::size_t>(x)];
        if (ch == '#')
          map.set_blocked({x, y, z});
        else if (ch != '.')
          throw ParseError(at + 1, static_cast<std::size_t>(x) + 1,
                           std::string("unknown voxel '") + ch + "'");
      }
    }
  }
  while (at < lines.size() && lines[at].empty()) ++at;
  if (at != lines.size())
    throw ParseError(at + 1, 0, "data beyond the declared " + std::to_string(depth) + " slices");
  return map;
}

inline std::string serialize_vox3(const GridMap& map)
{
  if (map.dims() != 3) throw InputError("vox3 maps are 3D");
  std::string out = "vox3 " + std::to_string(map.width()) + " " + std::to_string(map.height()) +
                    " " + std::to_string(map.depth()) + "\n";
  for (int z = 0; z < map.depth(); ++z) {
    if (z > 0) out += '\n';
    for (int y = 0; y < map.height(); ++y) {
      for (int x = 0; x < map.width(); ++x) out += map.blocked({x, y, z}) ? '#' : '.';
      out += '\n';
    }
  }
  return out;
}

} // namespace mra::io
