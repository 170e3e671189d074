#include "funcalg/error.hpp"

namespace funcalg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "length mismatch";
    case ErrorKind::KindMismatch: return "kind mismatch";
    case ErrorKind::UnsupportedPow: return "unsupported power";
    case ErrorKind::UnsupportedKind: return "unsupported kind";
    case ErrorKind::ArityMismatch: return "arity mismatch";
    case ErrorKind::UnknownPrimitive: return "unknown primitive";
    case ErrorKind::LexError: return "lex error";
    case ErrorKind::ParseError: return "parse error";
    case ErrorKind::UnknownIdentifier: return "unknown identifier";
    case ErrorKind::ReadOnlyBinding: return "read-only binding";
    case ErrorKind::InvalidProgram: return "invalid program";
    case ErrorKind::BackendMismatch: return "backend mismatch";
    case ErrorKind::FileNotFound: return "file not found";
  }
  return "error";
}

std::string Error::describe() const {
  std::string out;
  if (pos_) {
    out += "line " + std::to_string(pos_->line) + ", col " + std::to_string(pos_->column) + ": ";
  }
  out += to_string(kind_);
  out += ": ";
  out += what();
  return out;
}

}  // namespace funcalg
