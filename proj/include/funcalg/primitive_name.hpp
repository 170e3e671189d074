#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace funcalg {

enum class PrimitiveName {
  Sin,
  Cos,
  Tan,
  Asin,
  Acos,
  Atan,
  Sinh,
  Cosh,
  Tanh,
  Exp,
  Log,
  Sqrt,
  Abs,
  Floor,
  Ceiling,
  Cumsum,
  Cumprod,
};

inline constexpr std::array<PrimitiveName, 17> kAllPrimitives = {
    PrimitiveName::Sin,   PrimitiveName::Cos,     PrimitiveName::Tan,
    PrimitiveName::Asin,  PrimitiveName::Acos,    PrimitiveName::Atan,
    PrimitiveName::Sinh,  PrimitiveName::Cosh,    PrimitiveName::Tanh,
    PrimitiveName::Exp,   PrimitiveName::Log,     PrimitiveName::Sqrt,
    PrimitiveName::Abs,   PrimitiveName::Floor,   PrimitiveName::Ceiling,
    PrimitiveName::Cumsum, PrimitiveName::Cumprod,
};

/// Canonical lower-case name ("sin").
std::string_view canonical_name(PrimitiveName p);

/// Surface-language spelling ("Sin").
std::string surface_name(PrimitiveName p);

/// Case-insensitive lookup; nullopt outside the enumeration.
std::optional<PrimitiveName> find_primitive(std::string_view name);

}  // namespace funcalg
