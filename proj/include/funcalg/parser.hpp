#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "funcalg/error.hpp"
#include "funcalg/expr.hpp"

namespace funcalg {

enum class TokenKind { Number, Identifier, Operator, Punct, Colon, Assign, End };

struct Token {
  TokenKind kind;
  std::string lexeme;
  SourcePos pos;
  double number = 0.0;

  bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
};

/// Splits one source line. `#` starts a comment; the stream always ends with
/// an End token. Throws LexError at the first illegal character or malformed
/// number.
std::vector<Token> tokenize(std::string_view text, int line = 1);

using Binding = std::variant<FuncExpr, Value>;

/// Name table for the surface language. Seeded with the primitives (both
/// `Sin` and `sin`), pi, im, qi, qj, qk, Inf and NaN; seeds are read-only.
class Env {
 public:
  Env();

  const Binding* find(std::string_view name) const;
  bool is_seed(std::string_view name) const;

  /// Throws ReadOnlyBinding for seed names; replaces earlier user bindings.
  void define(const std::string& name, Binding binding);

  /// User bindings in first-definition order.
  std::vector<std::pair<std::string, const Binding*>> user_bindings() const;

 private:
  std::map<std::string, Binding, std::less<>> seeds_;
  std::map<std::string, Binding, std::less<>> user_;
  std::vector<std::string> order_;
};

struct FunctionDef {
  std::string name;
  std::vector<std::string> params;
  FuncExpr function;
};

struct ValueDef {
  std::string name;
  FuncExpr expr;
};

struct BareExpression {
  FuncExpr expr;
};

struct ReplCommand {
  std::string name;
  std::string argument;
};

using Statement = std::variant<FunctionDef, ValueDef, BareExpression, ReplCommand>;

/// Parses one statement from `tokens` (an End token, or the end of the span,
/// terminates it). Identifiers are resolved against `env` immediately.
Statement parse_statement(std::span<const Token> tokens, const Env& env);

/// Convenience: tokenize + parse a bare expression.
FuncExpr parse_expression(std::string_view text, const Env& env, int line = 1);

/// Fully parenthesized rendering that parses back to an equal tree.
std::string print_expr(const FuncExpr& e);

}  // namespace funcalg
