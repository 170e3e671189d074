#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "funcalg/value.hpp"

namespace funcalg {

/// Number of arguments a function expression takes. Polymorphic expressions
/// (constants and arithmetic over constants) accept any argument list.
class Arity {
 public:
  static constexpr Arity fixed(int n) { return Arity(n); }
  static constexpr Arity polymorphic() { return Arity(0); }

  constexpr bool is_fixed() const { return n_ > 0; }
  constexpr bool is_polymorphic() const { return n_ == 0; }
  /// Only meaningful when fixed.
  constexpr int count() const { return n_; }

  constexpr bool accepts(std::size_t argc) const {
    return is_polymorphic() || argc == static_cast<std::size_t>(n_);
  }

  std::string to_string() const;

  friend constexpr bool operator==(Arity, Arity) = default;

 private:
  constexpr explicit Arity(int n) : n_(n) {}
  int n_;
};

/// Join of two arities: the fixed one wins; two different fixed arities throw
/// ArityMismatch.
Arity join(Arity a, Arity b);

using LeafBody = std::function<Value(std::span<const Value>)>;

class FuncExpr;
struct Node;

/// A named function with a fixed argument count. `definition` is set for
/// functions written in the expression language; its body refers to the
/// arguments through Param nodes and is what the callback evaluates.
struct LeafDef {
  std::string name;
  int arity;
  LeafBody body;
  std::shared_ptr<const Node> definition;
  std::vector<std::string> params;
};

/// Handle to an immutable, shareable expression node.
class FuncExpr {
 public:
  const Node& node() const { return *node_; }
  const std::shared_ptr<const Node>& shared() const { return node_; }
  Arity arity() const;

  /// True when both handles refer to the same node object.
  bool same_node(const FuncExpr& other) const { return node_ == other.node_; }

  template <class... Args>
  auto operator()(Args&&... args) const;

  explicit FuncExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<const Node> node_;
};

struct LeafNode {
  std::shared_ptr<const LeafDef> def;
};
struct ConstNode {
  Value value;
};
struct PrimNode {
  PrimitiveName name;
};
/// Projection onto argument `index` of the enclosing `arity`-ary definition.
struct ParamNode {
  int index;
  int arity;
  std::string name;
};
struct BinaryNode {
  ArithOp op;
  FuncExpr lhs;
  FuncExpr rhs;
};
struct NegateNode {
  FuncExpr operand;
};
struct ApplyNode {
  FuncExpr callee;
  std::vector<FuncExpr> args;
};

struct Node {
  std::variant<LeafNode, ConstNode, PrimNode, ParamNode, BinaryNode, NegateNode, ApplyNode> data;
  Arity arity;
};

inline Arity FuncExpr::arity() const { return node_->arity; }

// Construction. Nothing is evaluated here.
FuncExpr lift_function(std::string name, int arity, LeafBody body);
/// Function whose body is an expression over Param nodes for `params`.
FuncExpr define_function(std::string name, std::vector<std::string> params, FuncExpr body);
FuncExpr param_expr(int index, int arity, std::string name);
FuncExpr const_expr(Value v);
FuncExpr prim_expr(PrimitiveName name);
FuncExpr combine(ArithOp op, FuncExpr e1, FuncExpr e2);
FuncExpr negate(FuncExpr e);
/// Composition node `callee(args...)`, regardless of argument kinds.
FuncExpr compose(FuncExpr callee, std::vector<FuncExpr> args);

Arity arity_of(const FuncExpr& e);

/// Evaluates `e` with one shared argument list. Polymorphic expressions
/// accept any list, including an empty one.
Value evaluate(const FuncExpr& e, std::span<const Value> args);
inline Value evaluate(const FuncExpr& e, std::initializer_list<Value> args) {
  return evaluate(e, std::span<const Value>(args.begin(), args.size()));
}

using Arg = std::variant<Value, FuncExpr>;
using Result = std::variant<Value, FuncExpr>;

/// Call dispatch: all-Value arguments evaluate, any function argument
/// composes (Values become constants).
Result apply(const FuncExpr& e, std::vector<Arg> args);

/// Same shape, same leaves (by identity), NaN-class equal constants.
bool structurally_equal(const FuncExpr& a, const FuncExpr& b);

/// Number of nodes, counting shared subtrees once per reference.
std::size_t node_count(const FuncExpr& e);

// Lifted arithmetic; plain numbers are wrapped as constants.
FuncExpr operator+(const FuncExpr& a, const FuncExpr& b);
FuncExpr operator-(const FuncExpr& a, const FuncExpr& b);
FuncExpr operator*(const FuncExpr& a, const FuncExpr& b);
FuncExpr operator/(const FuncExpr& a, const FuncExpr& b);
FuncExpr operator-(const FuncExpr& a);
FuncExpr pow(const FuncExpr& a, const FuncExpr& b);

inline FuncExpr operator+(const FuncExpr& a, double b) { return a + const_expr(b); }
inline FuncExpr operator+(double a, const FuncExpr& b) { return const_expr(a) + b; }
inline FuncExpr operator-(const FuncExpr& a, double b) { return a - const_expr(b); }
inline FuncExpr operator-(double a, const FuncExpr& b) { return const_expr(a) - b; }
inline FuncExpr operator*(const FuncExpr& a, double b) { return a * const_expr(b); }
inline FuncExpr operator*(double a, const FuncExpr& b) { return const_expr(a) * b; }
inline FuncExpr operator/(const FuncExpr& a, double b) { return a / const_expr(b); }
inline FuncExpr operator/(double a, const FuncExpr& b) { return const_expr(a) / b; }
inline FuncExpr pow(const FuncExpr& a, double b) { return pow(a, const_expr(b)); }

template <class... Args>
auto FuncExpr::operator()(Args&&... args) const {
  return apply(*this, std::vector<Arg>{Arg(std::forward<Args>(args))...});
}

}  // namespace funcalg
