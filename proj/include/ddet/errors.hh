#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddet
{
  /// Malformed or out-of-contract input (unknown state, wrong event kind,
  /// violated precondition).
  class input_error : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  /// A textual document could not be parsed.  Positions are 1-based.
  class parse_error : public input_error
  {
  public:
    parse_error(std::size_t line, std::size_t column, const std::string& what)
      : input_error("line " + std::to_string(line) + ", column "
                    + std::to_string(column) + ": " + what),
        line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
  };

  /// An exploration hit its configured size limit.
  class budget_exceeded : public std::runtime_error
  {
  public:
    budget_exceeded(const std::string& what_budget, std::size_t limit)
      : std::runtime_error(what_budget + " budget of " + std::to_string(limit)
                           + " exceeded"),
        limit_(limit)
    {
    }

    std::size_t limit() const noexcept { return limit_; }

  private:
    std::size_t limit_;
  };
}
