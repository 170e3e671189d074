#pragma once

#include <string_view>

#include "funcalg/expr.hpp"

namespace funcalg {

/// The Prim node for a built-in (case-insensitive: "Sin", "sin").
/// Throws UnknownPrimitive for names outside the fixed set. Every call with
/// the same name returns the same shared node.
FuncExpr builtin(std::string_view name);
FuncExpr builtin(PrimitiveName name);

}  // namespace funcalg
