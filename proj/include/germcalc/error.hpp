#pragma once

#include <stdexcept>
#include <string>

namespace germcalc {

enum class ErrorKind {
  Parse,
  Structural,
  NotAFinite,
  Unsupported,
  JetBoundExceeded,
  InconsistentInvariants,
  Undecided,
  NotIsolated,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind) noexcept;

// Process exit code reported by the command-line front end for an error kind.
int exit_code(ErrorKind kind) noexcept;

}  // namespace germcalc
