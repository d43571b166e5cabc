#pragma once

#include <stdexcept>
#include <string>

namespace mra {

struct Error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// Bad query input: start/goal blocked, out of bounds, or off the requested lattice.
struct InputError : Error
{
  using Error::Error;
};

/// Invalid planner or ladder configuration.
struct ConfigError : Error
{
  using Error::Error;
};

struct GenerationError : Error
{
  using Error::Error;
};

struct IoError : Error
{
  using Error::Error;
};

/// Map text rejected by a parser. Line and column are 1-based; column 0 means
/// the whole line.
class ParseError : public Error
{
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message,
             const std::string& source = {})
    : Error((source.empty() ? std::string() : source + ": ") + "line " + std::to_string(line) +
            (column ? ", column " + std::to_string(column) : std::string()) + ": " + message),
      line_(line),
      column_(column),
      message_(message)
  {
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

} // namespace mra
