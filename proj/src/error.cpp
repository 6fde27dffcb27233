#include "germcalc/error.hpp"

namespace germcalc {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Structural: return "StructuralError";
    case ErrorKind::NotAFinite: return "NotAFinite";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::JetBoundExceeded: return "JetBoundExceeded";
    case ErrorKind::InconsistentInvariants: return "InconsistentInvariants";
    case ErrorKind::Undecided: return "Undecided";
    case ErrorKind::NotIsolated: return "NotIsolated";
  }
  return "Error";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::NotAFinite:
    case ErrorKind::NotIsolated: return 3;
    case ErrorKind::Unsupported: return 4;
    case ErrorKind::JetBoundExceeded:
    case ErrorKind::Undecided: return 5;
    case ErrorKind::InconsistentInvariants: return 6;
    case ErrorKind::Structural: return 1;
  }
  return 1;
}

}  // namespace germcalc
