#pragma once

#include <stdexcept>
#include <string>

namespace misinfo {

enum class ErrorKind {
  InvalidArgument,
  ShapeMismatch,
  NonCanonical,
  Degenerate,
  UndefinedMetric,
  EmptyEquilibria,
  CapExceeded,
  Parse,
  Schema,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Errors caused by the game itself rather than by bad input or I/O.
inline bool is_domain_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::Degenerate:
    case ErrorKind::UndefinedMetric:
    case ErrorKind::EmptyEquilibria:
    case ErrorKind::CapExceeded:
    case ErrorKind::NonCanonical:
      return true;
    default:
      return false;
  }
}

}  // namespace misinfo
