#include "funcalg/expr.hpp"

#include <algorithm>

#include "funcalg/error.hpp"
#include "overloaded.hpp"

namespace funcalg {

namespace {

using detail::overloaded;

FuncExpr make(decltype(Node::data) data, Arity arity) {
  return FuncExpr(std::make_shared<const Node>(Node{std::move(data), arity}));
}

[[noreturn]] void arity_error(const std::string& what) {
  throw Error(ErrorKind::ArityMismatch, what);
}

Value eval_node(const FuncExpr& e, std::span<const Value> args) {
  return std::visit(
      overloaded{
          [&](const LeafNode& n) { return n.def->body(args); },
          [&](const ConstNode& n) { return n.value; },
          [&](const PrimNode& n) { return apply_builtin(n.name, args[0]); },
          [&](const ParamNode& n) { return args[static_cast<std::size_t>(n.index)]; },
          [&](const BinaryNode& n) {
            Value lhs = eval_node(n.lhs, args);
            Value rhs = eval_node(n.rhs, args);
            return value_binop(n.op, lhs, rhs);
          },
          [&](const NegateNode& n) { return value_neg(eval_node(n.operand, args)); },
          [&](const ApplyNode& n) {
            std::vector<Value> inner;
            inner.reserve(n.args.size());
            for (const FuncExpr& a : n.args) inner.push_back(eval_node(a, args));
            return eval_node(n.callee, inner);
          },
      },
      e.node().data);
}

bool same_leaf_def(const LeafDef& a, const LeafDef& b) { return &a == &b; }

}  // namespace

std::string Arity::to_string() const {
  return is_fixed() ? std::to_string(n_) : std::string("polymorphic");
}

Arity join(Arity a, Arity b) {
  if (a.is_polymorphic()) return b;
  if (b.is_polymorphic()) return a;
  if (a != b) {
    arity_error("cannot combine functions of arity " + a.to_string() + " and " + b.to_string());
  }
  return a;
}

FuncExpr lift_function(std::string name, int arity, LeafBody body) {
  if (arity < 1) arity_error("function '" + name + "' must take at least one argument");
  auto def = std::make_shared<const LeafDef>(LeafDef{std::move(name), arity, std::move(body), nullptr, {}});
  return make(LeafNode{std::move(def)}, Arity::fixed(arity));
}

FuncExpr define_function(std::string name, std::vector<std::string> params, FuncExpr body) {
  const int arity = static_cast<int>(params.size());
  if (arity < 1) arity_error("function '" + name + "' must take at least one argument");
  if (!body.arity().accepts(static_cast<std::size_t>(arity))) {
    arity_error("body of '" + name + "' has arity " + body.arity().to_string() + ", expected " +
                std::to_string(arity));
  }
  LeafBody callback = [body](std::span<const Value> args) { return eval_node(body, args); };
  auto def = std::make_shared<const LeafDef>(
      LeafDef{std::move(name), arity, std::move(callback), body.shared(), std::move(params)});
  return make(LeafNode{std::move(def)}, Arity::fixed(arity));
}

FuncExpr param_expr(int index, int arity, std::string name) {
  if (arity < 1 || index < 0 || index >= arity) {
    arity_error("parameter index " + std::to_string(index) + " out of range");
  }
  return make(ParamNode{index, arity, std::move(name)}, Arity::fixed(arity));
}

FuncExpr const_expr(Value v) { return make(ConstNode{std::move(v)}, Arity::polymorphic()); }

FuncExpr prim_expr(PrimitiveName name) { return make(PrimNode{name}, Arity::fixed(1)); }

FuncExpr combine(ArithOp op, FuncExpr e1, FuncExpr e2) {
  const Arity a = join(e1.arity(), e2.arity());
  return make(BinaryNode{op, std::move(e1), std::move(e2)}, a);
}

FuncExpr negate(FuncExpr e) {
  const Arity a = e.arity();
  return make(NegateNode{std::move(e)}, a);
}

FuncExpr compose(FuncExpr callee, std::vector<FuncExpr> args) {
  if (args.empty()) arity_error("a call needs at least one argument");
  if (!callee.arity().accepts(args.size())) {
    arity_error("function of arity " + callee.arity().to_string() + " called with " +
                std::to_string(args.size()) + " argument(s)");
  }
  Arity common = Arity::polymorphic();
  for (const FuncExpr& a : args) {
    if (common.is_fixed() && a.arity().is_fixed() && common != a.arity()) {
      arity_error("function arguments have different arities " + common.to_string() + " and " +
                  a.arity().to_string());
    }
    common = join(common, a.arity());
  }
  return make(ApplyNode{std::move(callee), std::move(args)}, common);
}

Arity arity_of(const FuncExpr& e) { return e.arity(); }

Value evaluate(const FuncExpr& e, std::span<const Value> args) {
  if (!e.arity().accepts(args.size())) {
    arity_error("function of arity " + e.arity().to_string() + " called with " +
                std::to_string(args.size()) + " argument(s)");
  }
  return eval_node(e, args);
}

Result apply(const FuncExpr& e, std::vector<Arg> args) {
  const bool all_values =
      std::all_of(args.begin(), args.end(), [](const Arg& a) { return std::holds_alternative<Value>(a); });
  if (all_values) {
    if (args.empty()) arity_error("a call needs at least one argument");
    std::vector<Value> values;
    values.reserve(args.size());
    for (Arg& a : args) values.push_back(std::move(std::get<Value>(a)));
    return evaluate(e, values);
  }
  std::vector<FuncExpr> fs;
  fs.reserve(args.size());
  for (Arg& a : args) {
    if (auto* v = std::get_if<Value>(&a)) {
      fs.push_back(const_expr(std::move(*v)));
    } else {
      fs.push_back(std::move(std::get<FuncExpr>(a)));
    }
  }
  return compose(e, std::move(fs));
}

bool structurally_equal(const FuncExpr& a, const FuncExpr& b) {
  if (a.same_node(b)) return true;
  if (a.node().data.index() != b.node().data.index()) return false;
  return std::visit(
      overloaded{
          [&](const LeafNode& n) {
            return same_leaf_def(*n.def, *std::get<LeafNode>(b.node().data).def);
          },
          [&](const ConstNode& n) { return same_value(n.value, std::get<ConstNode>(b.node().data).value); },
          [&](const PrimNode& n) { return n.name == std::get<PrimNode>(b.node().data).name; },
          [&](const ParamNode& n) {
            const auto& m = std::get<ParamNode>(b.node().data);
            return n.index == m.index && n.arity == m.arity;
          },
          [&](const BinaryNode& n) {
            const auto& m = std::get<BinaryNode>(b.node().data);
            return n.op == m.op && structurally_equal(n.lhs, m.lhs) && structurally_equal(n.rhs, m.rhs);
          },
          [&](const NegateNode& n) {
            return structurally_equal(n.operand, std::get<NegateNode>(b.node().data).operand);
          },
          [&](const ApplyNode& n) {
            const auto& m = std::get<ApplyNode>(b.node().data);
            if (n.args.size() != m.args.size() || !structurally_equal(n.callee, m.callee)) return false;
            for (std::size_t i = 0; i < n.args.size(); ++i) {
              if (!structurally_equal(n.args[i], m.args[i])) return false;
            }
            return true;
          },
      },
      a.node().data);
}

std::size_t node_count(const FuncExpr& e) {
  return std::visit(overloaded{
                        [](const BinaryNode& n) { return 1 + node_count(n.lhs) + node_count(n.rhs); },
                        [](const NegateNode& n) { return 1 + node_count(n.operand); },
                        [](const ApplyNode& n) {
                          std::size_t total = 1 + node_count(n.callee);
                          for (const FuncExpr& a : n.args) total += node_count(a);
                          return total;
                        },
                        [](const auto&) { return std::size_t{1}; },
                    },
                    e.node().data);
}

FuncExpr operator+(const FuncExpr& a, const FuncExpr& b) { return combine(ArithOp::Add, a, b); }
FuncExpr operator-(const FuncExpr& a, const FuncExpr& b) { return combine(ArithOp::Sub, a, b); }
FuncExpr operator*(const FuncExpr& a, const FuncExpr& b) { return combine(ArithOp::Mul, a, b); }
FuncExpr operator/(const FuncExpr& a, const FuncExpr& b) { return combine(ArithOp::Div, a, b); }
FuncExpr operator-(const FuncExpr& a) { return negate(a); }
FuncExpr pow(const FuncExpr& a, const FuncExpr& b) { return combine(ArithOp::Pow, a, b); }

}  // namespace funcalg
