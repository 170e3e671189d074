#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace funcalg {

enum class ErrorKind {
  LengthMismatch,
  KindMismatch,
  UnsupportedPow,
  UnsupportedKind,
  ArityMismatch,
  UnknownPrimitive,
  LexError,
  ParseError,
  UnknownIdentifier,
  ReadOnlyBinding,
  InvalidProgram,
  BackendMismatch,
  FileNotFound,
};

std::string_view to_string(ErrorKind kind);

/// 1-based source coordinates.
struct SourcePos {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// Single exception type for the library; `kind()` tells callers what went
/// wrong, `position()` is set for errors that can be traced to source text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<SourcePos> pos = std::nullopt)
      : std::runtime_error(message), kind_(kind), pos_(pos) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourcePos>& position() const noexcept { return pos_; }

  /// Copy of this error with a source position attached (keeps an existing one).
  Error at(SourcePos pos) const {
    return Error(kind_, what(), pos_ ? pos_ : std::optional<SourcePos>(pos));
  }

  /// "line L, col C: <kind>: message" when positioned, "<kind>: message" otherwise.
  std::string describe() const;

 private:
  ErrorKind kind_;
  std::optional<SourcePos> pos_;
};

}  // namespace funcalg
