#include <cctype>
#include <cmath>

#include "funcalg/parser.hpp"
#include "overloaded.hpp"

namespace funcalg {

namespace {

using detail::overloaded;

std::string real_literal(double x) {
  if (std::isnan(x)) return "NaN";
  if (std::isinf(x)) return x > 0 ? "Inf" : "(-Inf)";
  if (std::signbit(x)) return "(-" + shortest_repr(-x) + ")";
  return shortest_repr(x);
}

// Complex and quaternion constants print as arithmetic over the seeds; they
// read back as equal values but not as a single constant node.
std::string value_literal(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Scalar: return real_literal(v.scalar());
    case ValueKind::Vector: {
      std::string out = "[";
      for (std::size_t i = 0; i < v.vector().size(); ++i) {
        if (i) out += ", ";
        out += real_literal(v.vector()[i]);
      }
      return out + "]";
    }
    case ValueKind::Complex:
      return "(" + real_literal(v.complex().real()) + " + " + real_literal(v.complex().imag()) + "*im)";
    case ValueKind::Quaternion: {
      const Quaternion& q = v.quaternion();
      return "(" + real_literal(q.w) + " + " + real_literal(q.x) + "*qi + " + real_literal(q.y) + "*qj + " +
             real_literal(q.z) + "*qk)";
    }
  }
  return {};
}

}  // namespace

std::string print_expr(const FuncExpr& e) {
  return std::visit(
      overloaded{
          [](const LeafNode& n) { return n.def->name; },
          [](const ConstNode& n) { return value_literal(n.value); },
          [](const PrimNode& n) { return surface_name(n.name); },
          [](const ParamNode& n) { return n.name; },
          [](const BinaryNode& n) {
            return "(" + print_expr(n.lhs) + " " + op_symbol(n.op) + " " + print_expr(n.rhs) + ")";
          },
          [](const NegateNode& n) {
            std::string inner = print_expr(n.operand);
            // keep "-(2)" from reading back as the literal -2
            if (std::isdigit(static_cast<unsigned char>(inner[0])) || inner[0] == '.') inner = "(" + inner + ")";
            return "(-" + inner + ")";
          },
          [](const ApplyNode& n) {
            std::string out = print_expr(n.callee) + "(";
            for (std::size_t i = 0; i < n.args.size(); ++i) {
              if (i) out += ", ";
              out += print_expr(n.args[i]);
            }
            return out + ")";
          },
      },
      e.node().data);
}

}  // namespace funcalg
