#include <cmath>
#include <numbers>
#include <set>

#include "funcalg/parser.hpp"
#include "funcalg/registry.hpp"

namespace funcalg {

namespace {

constexpr double kMaxRangeLength = 1e7;

class Parser {
 public:
  Parser(std::span<const Token> tokens, const Env& env) : toks_(tokens), env_(env) {
    end_.kind = TokenKind::End;
    end_.pos = tokens.empty() ? SourcePos{} : tokens.back().pos;
    if (!tokens.empty() && tokens.back().kind != TokenKind::End) {
      end_.pos.column += static_cast<int>(tokens.back().lexeme.size());
    }
  }

  Statement statement() {
    Statement s = statement_body();
    if (peek().kind != TokenKind::End) fail(peek(), "unexpected '" + peek().lexeme + "'");
    return s;
  }

 private:
  Statement statement_body() {
    if (peek().kind == TokenKind::Identifier) {
      if (peek(1).kind == TokenKind::Assign) return value_def();
      if (peek(1).is(TokenKind::Punct, "(") && looks_like_definition()) return function_def();
    }
    return BareExpression{expr()};
  }

  // IDENT "(" IDENT {"," IDENT} ")" "="
  bool looks_like_definition() const {
    std::size_t k = 2;
    while (true) {
      if (peek(k).kind != TokenKind::Identifier) return false;
      ++k;
      if (peek(k).is(TokenKind::Punct, ")")) return peek(k + 1).kind == TokenKind::Assign;
      if (!peek(k).is(TokenKind::Punct, ",")) return false;
      ++k;
    }
  }

  Statement value_def() {
    const Token& name = next();
    check_bindable(name);
    next();  // '='
    return ValueDef{name.lexeme, expr()};
  }

  Statement function_def() {
    const Token& name = next();
    check_bindable(name);
    next();  // '('
    std::vector<std::string> params;
    std::set<std::string, std::less<>> seen;
    while (true) {
      const Token& p = next();
      check_bindable(p);
      if (!seen.insert(p.lexeme).second) fail(p, "duplicate parameter '" + p.lexeme + "'");
      params.push_back(p.lexeme);
      if (next().lexeme == ")") break;
    }
    const Token& assign = next();
    params_ = &params;
    FuncExpr body = expr();
    params_ = nullptr;
    try {
      return FunctionDef{name.lexeme, params, define_function(name.lexeme, params, std::move(body))};
    } catch (const Error& e) {
      throw e.at(assign.pos);
    }
  }

  FuncExpr expr() {
    FuncExpr lhs = term();
    while (peek().is(TokenKind::Operator, "+") || peek().is(TokenKind::Operator, "-")) {
      const Token& op = next();
      FuncExpr rhs = term();
      lhs = build(op, [&] { return combine(op.lexeme == "+" ? ArithOp::Add : ArithOp::Sub, lhs, rhs); });
    }
    return lhs;
  }

  FuncExpr term() {
    FuncExpr lhs = factor();
    while (peek().is(TokenKind::Operator, "*") || peek().is(TokenKind::Operator, "/")) {
      const Token& op = next();
      FuncExpr rhs = factor();
      lhs = build(op, [&] { return combine(op.lexeme == "*" ? ArithOp::Mul : ArithOp::Div, lhs, rhs); });
    }
    return lhs;
  }

  FuncExpr factor() {
    if (peek().is(TokenKind::Operator, "-")) {
      next();
      // A bare literal after unary minus is a negative constant.
      if (peek().kind == TokenKind::Number && !peek(1).is(TokenKind::Operator, "^") &&
          !peek(1).is(TokenKind::Punct, "(") && peek(1).kind != TokenKind::Colon) {
        return const_expr(-next().number);
      }
      return negate(factor());
    }
    return power();
  }

  FuncExpr power() {
    FuncExpr base = postfix();
    if (peek().is(TokenKind::Operator, "^")) {
      const Token& op = next();
      FuncExpr exponent = factor();
      return build(op, [&] { return combine(ArithOp::Pow, base, exponent); });
    }
    return base;
  }

  FuncExpr postfix() {
    FuncExpr callee = atom();
    while (peek().is(TokenKind::Punct, "(")) {
      const Token& open = next();
      std::vector<FuncExpr> args;
      if (!peek().is(TokenKind::Punct, ")")) {
        args.push_back(expr());
        while (peek().is(TokenKind::Punct, ",")) {
          next();
          args.push_back(expr());
        }
      }
      expect(")");
      callee = build(open, [&] { return compose(callee, std::move(args)); });
    }
    return callee;
  }

  FuncExpr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number:
        next();
        if (peek().kind == TokenKind::Colon) {
          next();
          if (peek().kind != TokenKind::Number) fail(peek(), "expected a number after ':'");
          return range(t, next());
        }
        return const_expr(t.number);
      case TokenKind::Identifier:
        next();
        return resolve(t);
      case TokenKind::Punct:
        if (t.lexeme == "(") {
          next();
          FuncExpr inner = expr();
          expect(")");
          return inner;
        }
        if (t.lexeme == "[") return vector_literal();
        break;
      default:
        break;
    }
    fail(t, t.kind == TokenKind::End ? "unexpected end of input, expected an expression"
                                     : "unexpected '" + t.lexeme + "', expected an expression");
  }

  FuncExpr range(const Token& from, const Token& to) {
    const double a = from.number;
    const double b = to.number;
    if (std::floor(a) != a) fail(from, "range bounds must be integers");
    if (std::floor(b) != b) fail(to, "range bounds must be integers");
    if (std::fabs(b - a) >= kMaxRangeLength) fail(to, "range is too long");
    std::vector<double> xs;
    const double step = b >= a ? 1.0 : -1.0;
    for (double x = a;; x += step) {
      xs.push_back(x);
      if (x == b) break;
    }
    return const_expr(Value(std::move(xs)));
  }

  FuncExpr vector_literal() {
    next();  // '['
    std::vector<double> xs;
    while (true) {
      const Token& first = peek();
      FuncExpr element = expr();
      if (!element.arity().is_polymorphic()) fail(first, "vector elements must be constants");
      Value v = build(first, [&] { return evaluate(element, std::span<const Value>{}); });
      if (!v.is_scalar()) fail(first, "vector elements must be real scalars");
      xs.push_back(v.scalar());
      if (peek().is(TokenKind::Punct, ",")) {
        next();
        continue;
      }
      expect("]");
      break;
    }
    return const_expr(Value(std::move(xs)));
  }

  FuncExpr resolve(const Token& t) {
    if (params_) {
      for (std::size_t i = 0; i < params_->size(); ++i) {
        if ((*params_)[i] == t.lexeme) {
          return param_expr(static_cast<int>(i), static_cast<int>(params_->size()), t.lexeme);
        }
      }
    }
    const Binding* b = env_.find(t.lexeme);
    if (!b) throw Error(ErrorKind::UnknownIdentifier, "no binding for '" + t.lexeme + "'", t.pos);
    if (const auto* f = std::get_if<FuncExpr>(b)) return *f;
    return const_expr(std::get<Value>(*b));
  }

  void check_bindable(const Token& t) {
    if (t.kind != TokenKind::Identifier) fail(t, "expected a name");
    if (env_.is_seed(t.lexeme)) {
      throw Error(ErrorKind::ReadOnlyBinding, "'" + t.lexeme + "' is built in and cannot be rebound", t.pos);
    }
  }

  // Runs a construction step, attaching the token's position to any error.
  template <class F>
  auto build(const Token& at, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      throw e.at(at.pos);
    }
  }

  void expect(std::string_view punct) {
    if (!peek().is(TokenKind::Punct, punct)) {
      fail(peek(), "expected '" + std::string(punct) + "'" +
                       (peek().kind == TokenKind::End ? std::string(" before end of input")
                                                      : ", found '" + peek().lexeme + "'"));
    }
    next();
  }

  [[noreturn]] void fail(const Token& t, const std::string& what) {
    throw Error(ErrorKind::ParseError, what, t.pos);
  }

  const Token& peek(std::size_t k = 0) const {
    return pos_ + k < toks_.size() ? toks_[pos_ + k] : end_;
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() && t.kind != TokenKind::End) ++pos_;
    return t;
  }

  std::span<const Token> toks_;
  const Env& env_;
  Token end_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* params_ = nullptr;
};

}  // namespace

Env::Env() {
  for (PrimitiveName p : kAllPrimitives) {
    seeds_.emplace(surface_name(p), builtin(p));
    seeds_.emplace(std::string(canonical_name(p)), builtin(p));
  }
  seeds_.emplace("pi", Value(std::numbers::pi));
  seeds_.emplace("im", Value(Complex(0.0, 1.0)));
  seeds_.emplace("qi", Value(Quaternion(0, 1, 0, 0)));
  seeds_.emplace("qj", Value(Quaternion(0, 0, 1, 0)));
  seeds_.emplace("qk", Value(Quaternion(0, 0, 0, 1)));
  seeds_.emplace("Inf", Value(HUGE_VAL));
  seeds_.emplace("NaN", Value(std::nan("")));
}

const Binding* Env::find(std::string_view name) const {
  if (auto it = seeds_.find(name); it != seeds_.end()) return &it->second;
  if (auto it = user_.find(name); it != user_.end()) return &it->second;
  return nullptr;
}

bool Env::is_seed(std::string_view name) const { return seeds_.find(name) != seeds_.end(); }

void Env::define(const std::string& name, Binding binding) {
  if (is_seed(name)) {
    throw Error(ErrorKind::ReadOnlyBinding, "'" + name + "' is built in and cannot be rebound");
  }
  auto [it, inserted] = user_.insert_or_assign(name, std::move(binding));
  if (inserted) order_.push_back(name);
}

std::vector<std::pair<std::string, const Binding*>> Env::user_bindings() const {
  std::vector<std::pair<std::string, const Binding*>> out;
  for (const std::string& name : order_) out.emplace_back(name, &user_.find(name)->second);
  return out;
}

Statement parse_statement(std::span<const Token> tokens, const Env& env) {
  return Parser(tokens, env).statement();
}

FuncExpr parse_expression(std::string_view text, const Env& env, int line) {
  const std::vector<Token> tokens = tokenize(text, line);
  Statement s = parse_statement(tokens, env);
  if (auto* bare = std::get_if<BareExpression>(&s)) return bare->expr;
  throw Error(ErrorKind::ParseError, "expected an expression, not a definition", tokens.front().pos);
}

}  // namespace funcalg
