#pragma once

#include <stdexcept>
#include <string>

namespace qgor {

/// Malformed input text (polynomials, session files). Carries a position.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string msg, std::size_t line, std::size_t column)
      : std::runtime_error(std::move(msg)), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured computation budget (t_max, n_max, search attempts) ran out.
/// Never silently truncated; callers may raise the budget and retry.
class budget_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant the library guarantees failed to hold.
class internal_error : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace qgor
