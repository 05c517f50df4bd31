#pragma once

#include <stdexcept>
#include <string>

namespace veech {

enum class ErrorKind {
  invalid_argument,
  parse,
  validation,
  disconnected_cover,
  cap_exceeded,
  oracle_disagreement,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace veech
