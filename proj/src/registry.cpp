#include "funcalg/registry.hpp"

#include <string>
#include <vector>

#include "funcalg/error.hpp"

namespace funcalg {

namespace {

const std::vector<FuncExpr>& table() {
  static const std::vector<FuncExpr> nodes = [] {
    std::vector<FuncExpr> out;
    for (PrimitiveName p : kAllPrimitives) out.push_back(prim_expr(p));
    return out;
  }();
  return nodes;
}

}  // namespace

FuncExpr builtin(PrimitiveName name) { return table()[static_cast<std::size_t>(name)]; }

FuncExpr builtin(std::string_view name) {
  const auto p = find_primitive(name);
  if (!p) throw Error(ErrorKind::UnknownPrimitive, "no primitive named '" + std::string(name) + "'");
  return builtin(*p);
}

}  // namespace funcalg
