#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "mra/errors.hpp"
#include "mra/grid_map.hpp"
#include "mra/io/movingai.hpp"
#include "mra/io/vox3.hpp"

namespace mra::io {

enum class MapFormat
{
  movingai,
  vox3
};

inline MapFormat parse_map_format(std::string_view s)
{
  if (s == "movingai") return MapFormat::movingai;
  if (s == "vox3") return MapFormat::vox3;
  throw ConfigError("unknown map format '" + std::string(s) + "' (expected movingai or vox3)");
}

inline std::string read_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes through a sibling temporary and renames it into place, so a failed
/// write never leaves a partial file behind.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view contents)
{
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("write failed for '" + path.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot write '" + path.string() + "'");
  }
}

inline GridMap load_map(const std::filesystem::path& path, MapFormat format)
{
  const std::string text = read_file(path);
  try {
    return format == MapFormat::movingai ? parse_movingai_map(text) : parse_vox3(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), path.string());
  }
}

} // namespace mra::io
