#include <cmath>

#include "doctest.h"
#include "funcalg/error.hpp"
#include "funcalg/parser.hpp"
#include "funcalg/registry.hpp"
#include "support/random_trees.hpp"
#include "support/shunting_yard.hpp"

using namespace funcalg;

namespace {

std::string kinds(const std::vector<Token>& toks) {
  std::string out;
  for (const Token& t : toks) {
    if (t.kind == TokenKind::End) break;
    out += t.lexeme + " ";
  }
  return out;
}

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an error");
  return Error(ErrorKind::ParseError, "");
}

void define(Env& env, const char* source) {
  const auto toks = tokenize(source);
  Statement s = parse_statement(toks, env);
  if (auto* f = std::get_if<FunctionDef>(&s)) {
    env.define(f->name, f->function);
  } else {
    const auto& v = std::get<ValueDef>(s);
    env.define(v.name, evaluate(v.expr, std::span<const Value>{}));
  }
}

double eval_text(const Env& env, const std::string& text) {
  return evaluate(parse_expression(text, env), std::span<const Value>{}).scalar();
}

}  // namespace

TEST_CASE("tokenize") {
  CHECK(kinds(tokenize("(f+g)(1:10)")) == "( f + g ) ( 1 : 10 ) ");
  const auto toks = tokenize("f(x,y) = x + x*y  # def");
  CHECK(kinds(toks) == "f ( x , y ) = x + x * y ");
  CHECK(toks[0].kind == TokenKind::Identifier);
  CHECK(toks[6].kind == TokenKind::Assign);
  CHECK(toks.back().kind == TokenKind::End);

  const auto nums = tokenize("1.2e-3 .5 7 3E+2");
  CHECK(nums[0].number == 1.2e-3);
  CHECK(nums[1].number == 0.5);
  CHECK(nums[3].number == 300.0);

  const Error e = error_of([] { tokenize("1.2e-3@"); });
  CHECK(e.kind() == ErrorKind::LexError);
  CHECK(e.position() == SourcePos{1, 7});
  CHECK(error_of([] { tokenize("1.2.3"); }).kind() == ErrorKind::LexError);
  CHECK(error_of([] { tokenize("2e"); }).kind() == ErrorKind::LexError);
  CHECK(error_of([] { tokenize("12abc"); }).kind() == ErrorKind::LexError);
}

TEST_CASE("token positions are 1-based and monotone") {
  const auto toks = tokenize("  alpha *(beta)", 4);
  CHECK(toks[0].pos == SourcePos{4, 3});
  CHECK(toks[1].pos == SourcePos{4, 9});
  for (std::size_t i = 1; i < toks.size(); ++i) CHECK(toks[i - 1].pos.column < toks[i].pos.column);
}

TEST_CASE("precedence") {
  Env env;
  CHECK(eval_text(env, "-2^2") == -4.0);
  const FuncExpr neg = parse_expression("-2^2", env);
  REQUIRE(std::holds_alternative<NegateNode>(neg.node().data));
  CHECK(eval_text(env, "2^3^2") == 512.0);
  CHECK(eval_text(env, "2^-1") == 0.5);
  CHECK(eval_text(env, "1 - 2 - 3") == -4.0);
  CHECK(eval_text(env, "8 / 4 / 2") == 1.0);
  CHECK(eval_text(env, "1 + 2 * 3") == 7.0);
  CHECK(eval_text(env, "-(1 + 2) * 3") == -9.0);
  CHECK(eval_text(env, "2 * -3") == -6.0);
}

TEST_CASE("precedence agrees with a shunting-yard oracle") {
  Env env;
  funcalg::testing::ArithmeticTextGen gen(2024);
  for (int i = 0; i < 2000; ++i) {
    const std::string text = gen.expr(4);
    CAPTURE(text);
    const double expected = funcalg::testing::shunting_yard_eval(text);
    CHECK(same_value(eval_text(env, text), expected));
  }
}

TEST_CASE("worked examples parse and evaluate") {
  Env env;
  define(env, "f(x,y,z) = x + x*y - x/z");
  define(env, "g(x,y,z) = x^2 - z");
  define(env, "x = 1.2");
  define(env, "y = 1.7");
  define(env, "z = 4.3");
  CHECK(eval_text(env, "((f + g)*(f + 4 - 2*f*g))(x,y,z)") == doctest::Approx(2.411975).epsilon(1e-6));
  CHECK(eval_text(env, "(f + g)(x + z, y + z, (f - g)(x, x, y))") == doctest::Approx(64.04918).epsilon(1e-6));

  define(env, "j(x,y) = Cos(x) + Sin(x-y)");
  define(env, "k(x,y) = Tan(x) + Log(x+y)");
  define(env, "l(x,y) = Sin(x/2) + x^2");
  const FuncExpr chain = parse_expression("(j + k + l)(Sin + Log, Cos + Exp)(Sin + Tan)(0.4)", env);
  REQUIRE(std::holds_alternative<ApplyNode>(chain.node().data));
  CHECK(evaluate(chain, std::span<const Value>{}).scalar() == doctest::Approx(2.545235).epsilon(1e-6));
}

TEST_CASE("literals") {
  Env env;
  const Value range = evaluate(parse_expression("1:4", env), std::span<const Value>{});
  CHECK(same_value(range, Value(std::vector<double>{1, 2, 3, 4})));
  const Value down = evaluate(parse_expression("3:1", env), std::span<const Value>{});
  CHECK(same_value(down, Value(std::vector<double>{3, 2, 1})));
  const Value vec = evaluate(parse_expression("[1, -2, 3*2]", env), std::span<const Value>{});
  CHECK(same_value(vec, Value(std::vector<double>{1, -2, 6})));
  const Value q = evaluate(parse_expression("1 + qj", env), std::span<const Value>{});
  CHECK(q.quaternion() == Quaternion(1, 0, 1, 0));
  const Value c = evaluate(parse_expression("2 + 3*im", env), std::span<const Value>{});
  CHECK(c.complex() == Complex(2, 3));
  CHECK(error_of([&] { parse_expression("1.5:3", env); }).kind() == ErrorKind::ParseError);
  CHECK(error_of([&] { parse_expression("[1, Sin]", env); }).kind() == ErrorKind::ParseError);
}

TEST_CASE("statements") {
  Env env;
  auto parse = [&](const char* text) {
    const auto toks = tokenize(text);
    return parse_statement(toks, env);
  };
  const Statement fdef = parse("f(x, y) = x*y");
  REQUIRE(std::holds_alternative<FunctionDef>(fdef));
  CHECK(std::get<FunctionDef>(fdef).params == std::vector<std::string>{"x", "y"});
  CHECK(arity_of(std::get<FunctionDef>(fdef).function) == Arity::fixed(2));
  CHECK(std::holds_alternative<ValueDef>(parse("a = 2")));
  CHECK(std::holds_alternative<BareExpression>(parse("Sin(2)")));

  CHECK(error_of([&] { parse("f(x, x) = x"); }).kind() == ErrorKind::ParseError);
  CHECK(error_of([&] { parse("Sin(x) = x"); }).kind() == ErrorKind::ReadOnlyBinding);
  CHECK(error_of([&] { parse("pi = 3"); }).kind() == ErrorKind::ReadOnlyBinding);
  CHECK(error_of([&] { parse("f(x) = y"); }).kind() == ErrorKind::UnknownIdentifier);
}

TEST_CASE("early binding") {
  Env env;
  define(env, "g(x) = x + 1");
  define(env, "f(x) = g(x) * 2");
  define(env, "g(x) = x + 100");
  CHECK(eval_text(env, "f(1)") == 4.0);
  CHECK(eval_text(env, "g(1)") == 101.0);
}

TEST_CASE("errors carry positions inside the offending lexeme") {
  Env env;
  define(env, "f(x) = x");
  define(env, "h(x, y) = x");
  const Error unknown = error_of([&] { parse_expression("f + nope", env); });
  CHECK(unknown.kind() == ErrorKind::UnknownIdentifier);
  CHECK(unknown.position() == SourcePos{1, 5});

  const Error arity = error_of([&] { parse_expression("f + h", env); });
  CHECK(arity.kind() == ErrorKind::ArityMismatch);
  CHECK(arity.position() == SourcePos{1, 3});

  const Error open = error_of([&] { parse_expression("(f+g)(", env); });
  CHECK(open.kind() == ErrorKind::UnknownIdentifier);
  const Error eoi = error_of([&] { parse_expression("(f+f)(", env); });
  CHECK(eoi.kind() == ErrorKind::ParseError);
  CHECK(eoi.position() == SourcePos{1, 7});

  const Error stray = error_of([&] { parse_expression("f ) 1", env); });
  CHECK(stray.position() == SourcePos{1, 3});
}

TEST_CASE("print_expr") {
  Env env;
  define(env, "f(x) = x^2");
  define(env, "g(x) = 1/(1-x)");
  define(env, "fun(x) = x^2 + 2");
  CHECK(print_expr(parse_expression("f + g", env)) == "(f + g)");
  CHECK(print_expr(parse_expression("fun(Sin)", env)) == "fun(Sin)");
  CHECK(print_expr(parse_expression("-f", env)) == "(-f)");
  CHECK(print_expr(parse_expression("-(2)", env)) == "(-(2))");
  CHECK(print_expr(parse_expression("-2", env)) == "(-2)");
  CHECK(print_expr(parse_expression("[1, 2.5]", env)) == "[1, 2.5]");
  CHECK(print_expr(parse_expression("0.1", env)) == "0.1");
}

TEST_CASE("print/parse round trip on random trees") {
  funcalg::testing::TreeFixture fx = funcalg::testing::make_fixture();
  funcalg::testing::TreeGen gen(fx, 77);
  for (int i = 0; i < 2000; ++i) {
    gen.set_vector_length(i % 2 ? 3 : 1);
    const FuncExpr e = gen.tree(static_cast<int>(gen.pick(4)), 6);
    const std::string text = print_expr(e);
    CAPTURE(text);
    CHECK(structurally_equal(parse_expression(text, fx.env), e));
  }
}
