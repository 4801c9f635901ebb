#pragma once

#include <stdexcept>
#include <string>

namespace locgame {

enum class ErrorKind {
  invalid_argument,
  cyclic,
  resource,
  empty_edge,
  strategy,
  parse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace locgame
