#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "funcalg/expr.hpp"

namespace funcalg::vm {

enum class OpCode : std::uint8_t {
  LoadArg,     // a = argument index in the current frame
  LoadConst,   // a = constant pool index
  CallPrim,    // a = PrimitiveName
  CallLeaf,    // a = leaf table index, b = argument count
  BinaryOp,    // a = ArithOp
  Negate,
  BeginFrame,  // a = frame arity; pops that many operands into a new frame
  EndFrame,
};

struct Instruction {
  OpCode code;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

std::string to_string(const Instruction& ins);

/// Flat, immutable stack-machine program compiled from one expression tree.
struct Program {
  std::vector<Instruction> code;
  std::vector<Value> constants;
  std::vector<std::shared_ptr<const LeafDef>> leaves;
  Arity arity = Arity::polymorphic();
  std::size_t max_stack = 0;
  std::size_t max_frames = 0;
};

/// Post-order flattening. Functions defined in the expression language are
/// inlined; lifted host callbacks go through CallLeaf.
Program compile(const FuncExpr& e);

/// Static stack-effect check. Throws InvalidProgram naming the first bad
/// instruction; fills in max_stack/max_frames on success.
void verify(Program& p);

/// Re-entrant; per-call stacks.
Value run(const Program& p, std::span<const Value> args);
inline Value run(const Program& p, std::initializer_list<Value> args) {
  return run(p, std::span<const Value>(args.begin(), args.size()));
}

std::string disassemble(const Program& p);

struct BenchReport {
  std::string backend;
  std::size_t iterations = 0;
  std::chrono::nanoseconds total{0};
  double mean_ns = 0.0;
  Value result;
};

struct BenchPair {
  BenchReport tree;
  BenchReport vm;
};

using Backend = std::function<Value(std::span<const Value>)>;

/// Times two evaluators on identical inputs. A warm-up call of each runs first
/// and must produce NaN-class equal results, else BackendMismatch.
std::pair<BenchReport, BenchReport> bench_backends(const std::string& label_a, const Backend& a,
                                                   const std::string& label_b, const Backend& b,
                                                   std::span<const Value> args,
                                                   std::size_t iterations);

/// Tree-walker against compiled program.
BenchPair bench(const FuncExpr& e, std::span<const Value> args, std::size_t iterations);

}  // namespace funcalg::vm
