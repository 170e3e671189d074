#include "funcalg/primitive_name.hpp"

#include <cctype>

namespace funcalg {

std::string_view canonical_name(PrimitiveName p) {
  switch (p) {
    case PrimitiveName::Sin: return "sin";
    case PrimitiveName::Cos: return "cos";
    case PrimitiveName::Tan: return "tan";
    case PrimitiveName::Asin: return "asin";
    case PrimitiveName::Acos: return "acos";
    case PrimitiveName::Atan: return "atan";
    case PrimitiveName::Sinh: return "sinh";
    case PrimitiveName::Cosh: return "cosh";
    case PrimitiveName::Tanh: return "tanh";
    case PrimitiveName::Exp: return "exp";
    case PrimitiveName::Log: return "log";
    case PrimitiveName::Sqrt: return "sqrt";
    case PrimitiveName::Abs: return "abs";
    case PrimitiveName::Floor: return "floor";
    case PrimitiveName::Ceiling: return "ceiling";
    case PrimitiveName::Cumsum: return "cumsum";
    case PrimitiveName::Cumprod: return "cumprod";
  }
  return "?";
}

std::string surface_name(PrimitiveName p) {
  std::string s(canonical_name(p));
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::optional<PrimitiveName> find_primitive(std::string_view name) {
  std::string lower;
  lower.reserve(name.size());
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (PrimitiveName p : kAllPrimitives) {
    if (canonical_name(p) == lower) return p;
  }
  return std::nullopt;
}

}  // namespace funcalg
