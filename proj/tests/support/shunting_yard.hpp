#pragma once

// Reference evaluator for flat real arithmetic (numbers, + - * / ^, unary
// minus, parentheses) using Dijkstra's shunting-yard algorithm. Independent of
// the library's lexer and parser; used as a precedence oracle.

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace funcalg::testing {

inline double shunting_yard_eval(const std::string& text) {
  enum class Op { Add, Sub, Mul, Div, Pow, Neg, LParen };
  auto prec = [](Op op) {
    switch (op) {
      case Op::Add: case Op::Sub: return 1;
      case Op::Mul: case Op::Div: return 2;
      case Op::Neg: return 3;
      case Op::Pow: return 4;
      case Op::LParen: return 0;
    }
    return 0;
  };
  auto right_assoc = [](Op op) { return op == Op::Pow || op == Op::Neg; };

  std::vector<double> out;
  std::vector<Op> ops;
  auto reduce = [&] {
    const Op op = ops.back();
    ops.pop_back();
    if (op == Op::Neg) {
      out.back() = -out.back();
      return;
    }
    const double b = out.back();
    out.pop_back();
    double& a = out.back();
    switch (op) {
      case Op::Add: a = a + b; break;
      case Op::Sub: a = a - b; break;
      case Op::Mul: a = a * b; break;
      case Op::Div: a = a / b; break;
      case Op::Pow: a = std::pow(a, b); break;
      default: throw std::logic_error("bad reduce");
    }
  };

  bool expect_operand = true;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ') {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      char* end = nullptr;
      out.push_back(std::strtod(text.c_str() + i, &end));
      i = static_cast<std::size_t>(end - text.c_str());
      expect_operand = false;
      continue;
    }
    ++i;
    if (c == '(') {
      ops.push_back(Op::LParen);
      expect_operand = true;
      continue;
    }
    if (c == ')') {
      while (ops.back() != Op::LParen) reduce();
      ops.pop_back();
      expect_operand = false;
      continue;
    }
    Op op;
    if (c == '-' && expect_operand) {
      // prefix operator: nothing to its left to reduce
      ops.push_back(Op::Neg);
      continue;
    }
    switch (c) {
      case '+': op = Op::Add; break;
      case '-': op = Op::Sub; break;
      case '*': op = Op::Mul; break;
      case '/': op = Op::Div; break;
      case '^': op = Op::Pow; break;
      default: throw std::invalid_argument(std::string("unexpected character ") + c);
    }
    while (!ops.empty() && ops.back() != Op::LParen &&
           (prec(ops.back()) > prec(op) || (prec(ops.back()) == prec(op) && !right_assoc(op)))) {
      reduce();
    }
    ops.push_back(op);
    expect_operand = true;
  }
  while (!ops.empty()) reduce();
  return out.back();
}

/// Random well-formed flat arithmetic text.
class ArithmeticTextGen {
 public:
  explicit ArithmeticTextGen(std::uint64_t seed) : rng_(seed) {}

  std::string expr(int depth) {
    std::string s = term(depth);
    while (depth > 0 && chance(0.4)) s += pick_of({" + ", " - ", "+", "-"}) + term(depth - 1);
    return s;
  }

 private:
  std::string term(int depth) {
    std::string s = factor(depth);
    while (depth > 0 && chance(0.4)) s += pick_of({" * ", " / ", "*", "/"}) + factor(depth - 1);
    return s;
  }
  std::string factor(int depth) {
    if (chance(0.2)) return pick_of({"-", "- "}) + factor(depth);
    return power(depth);
  }
  std::string power(int depth) {
    std::string s = atom(depth);
    if (depth > 0 && chance(0.25)) s += pick_of({"^", " ^ "}) + factor(depth - 1);
    return s;
  }
  std::string atom(int depth) {
    if (depth > 0 && chance(0.25)) return "(" + expr(depth - 1) + ")";
    switch (std::uniform_int_distribution<int>(0, 2)(rng_)) {
      case 0: return std::to_string(std::uniform_int_distribution<int>(0, 9)(rng_));
      case 1: return std::to_string(std::uniform_int_distribution<int>(1, 99)(rng_)) + "." +
                     std::to_string(std::uniform_int_distribution<int>(0, 99)(rng_));
      default: return "0." + std::to_string(std::uniform_int_distribution<int>(1, 999)(rng_));
    }
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::string pick_of(std::initializer_list<const char*> xs) {
    auto it = xs.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng_));
    return *it;
  }

  std::mt19937_64 rng_;
};

}  // namespace funcalg::testing
