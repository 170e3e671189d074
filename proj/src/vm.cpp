#include "funcalg/vm.hpp"

#include <sstream>

#include "funcalg/error.hpp"
#include "overloaded.hpp"

namespace funcalg::vm {

namespace {

using detail::overloaded;

class Compiler {
 public:
  explicit Compiler(Program& p) : p_(p) {}

  void emit(const FuncExpr& e) {
    std::visit(overloaded{
                   [&](const LeafNode& n) {
                     if (n.def->definition) {
                       emit(FuncExpr(n.def->definition));
                       return;
                     }
                     for (int i = 0; i < n.def->arity; ++i) push(OpCode::LoadArg, static_cast<std::uint32_t>(i));
                     push(OpCode::CallLeaf, leaf_index(n.def), static_cast<std::uint32_t>(n.def->arity));
                   },
                   [&](const ConstNode& n) {
                     p_.constants.push_back(n.value);
                     push(OpCode::LoadConst, static_cast<std::uint32_t>(p_.constants.size() - 1));
                   },
                   [&](const PrimNode& n) {
                     push(OpCode::LoadArg, 0);
                     push(OpCode::CallPrim, static_cast<std::uint32_t>(n.name));
                   },
                   [&](const ParamNode& n) { push(OpCode::LoadArg, static_cast<std::uint32_t>(n.index)); },
                   [&](const BinaryNode& n) {
                     emit(n.lhs);
                     emit(n.rhs);
                     push(OpCode::BinaryOp, static_cast<std::uint32_t>(n.op));
                   },
                   [&](const NegateNode& n) {
                     emit(n.operand);
                     push(OpCode::Negate);
                   },
                   [&](const ApplyNode& n) {
                     for (const FuncExpr& a : n.args) emit(a);
                     push(OpCode::BeginFrame, static_cast<std::uint32_t>(n.args.size()));
                     emit(n.callee);
                     push(OpCode::EndFrame);
                   },
               },
               e.node().data);
  }

 private:
  void push(OpCode code, std::uint32_t a = 0, std::uint32_t b = 0) { p_.code.push_back({code, a, b}); }

  std::uint32_t leaf_index(const std::shared_ptr<const LeafDef>& def) {
    for (std::size_t i = 0; i < p_.leaves.size(); ++i) {
      if (p_.leaves[i] == def) return static_cast<std::uint32_t>(i);
    }
    p_.leaves.push_back(def);
    return static_cast<std::uint32_t>(p_.leaves.size() - 1);
  }

  Program& p_;
};

[[noreturn]] void invalid(std::size_t pc, const std::string& what) {
  throw Error(ErrorKind::InvalidProgram, what + " at instruction " + std::to_string(pc));
}

const char* opcode_name(OpCode c) {
  switch (c) {
    case OpCode::LoadArg: return "LoadArg";
    case OpCode::LoadConst: return "LoadConst";
    case OpCode::CallPrim: return "CallPrim";
    case OpCode::CallLeaf: return "CallLeaf";
    case OpCode::BinaryOp: return "BinaryOp";
    case OpCode::Negate: return "Negate";
    case OpCode::BeginFrame: return "BeginFrame";
    case OpCode::EndFrame: return "EndFrame";
  }
  return "?";
}

struct Frame {
  std::size_t base;
  std::size_t size;
};

}  // namespace

std::string to_string(const Instruction& ins) {
  std::string out = opcode_name(ins.code);
  switch (ins.code) {
    case OpCode::LoadArg:
    case OpCode::LoadConst:
    case OpCode::BeginFrame:
      out += " " + std::to_string(ins.a);
      break;
    case OpCode::CallPrim:
      out += " " + std::string(canonical_name(static_cast<PrimitiveName>(ins.a)));
      break;
    case OpCode::CallLeaf:
      out += " " + std::to_string(ins.a) + " " + std::to_string(ins.b);
      break;
    case OpCode::BinaryOp:
      out += " ";
      out += op_symbol(static_cast<ArithOp>(ins.a));
      break;
    case OpCode::Negate:
    case OpCode::EndFrame:
      break;
  }
  return out;
}

Program compile(const FuncExpr& e) {
  Program p;
  p.arity = e.arity();
  Compiler(p).emit(e);
  verify(p);
  return p;
}

void verify(Program& p) {
  struct FrameShape {
    std::size_t arity;
    std::size_t depth_at_entry;
  };
  std::vector<FrameShape> frames{{p.arity.is_fixed() ? static_cast<std::size_t>(p.arity.count()) : 0, 0}};
  std::size_t depth = 0;
  std::size_t max_depth = 0;
  std::size_t max_frames = 1;

  auto need = [&](std::size_t pc, std::size_t n) {
    if (depth < n) invalid(pc, "operand stack underflow");
  };

  for (std::size_t pc = 0; pc < p.code.size(); ++pc) {
    const Instruction& ins = p.code[pc];
    switch (ins.code) {
      case OpCode::LoadArg:
        if (ins.a >= frames.back().arity) invalid(pc, "argument index out of range");
        ++depth;
        break;
      case OpCode::LoadConst:
        if (ins.a >= p.constants.size()) invalid(pc, "constant index out of range");
        ++depth;
        break;
      case OpCode::CallPrim:
        if (ins.a >= kAllPrimitives.size()) invalid(pc, "unknown primitive");
        need(pc, 1);
        break;
      case OpCode::CallLeaf:
        if (ins.a >= p.leaves.size()) invalid(pc, "leaf index out of range");
        if (static_cast<int>(ins.b) != p.leaves[ins.a]->arity) invalid(pc, "leaf argument count mismatch");
        need(pc, ins.b);
        depth = depth - ins.b + 1;
        break;
      case OpCode::BinaryOp:
        if (ins.a > static_cast<std::uint32_t>(ArithOp::Pow)) invalid(pc, "unknown operator");
        need(pc, 2);
        --depth;
        break;
      case OpCode::Negate:
        need(pc, 1);
        break;
      case OpCode::BeginFrame:
        if (ins.a == 0) invalid(pc, "empty frame");
        need(pc, ins.a);
        depth -= ins.a;
        frames.push_back({ins.a, depth});
        max_frames = std::max(max_frames, frames.size());
        break;
      case OpCode::EndFrame:
        if (frames.size() < 2) invalid(pc, "frame stack underflow");
        if (depth != frames.back().depth_at_entry + 1) invalid(pc, "frame must leave exactly one value");
        frames.pop_back();
        break;
    }
    max_depth = std::max(max_depth, depth);
  }
  if (frames.size() != 1) invalid(p.code.size(), "unterminated frame");
  if (depth != 1) invalid(p.code.size(), "program must leave exactly one value");
  p.max_stack = max_depth;
  p.max_frames = max_frames;
}

Value run(const Program& p, std::span<const Value> args) {
  if (!p.arity.accepts(args.size())) {
    throw Error(ErrorKind::ArityMismatch, "program of arity " + p.arity.to_string() + " called with " +
                                              std::to_string(args.size()) + " argument(s)");
  }
  std::vector<Value> stack;
  stack.reserve(p.max_stack);
  std::vector<Value> frame_values(args.begin(), args.end());
  std::vector<Frame> frames;
  frames.reserve(p.max_frames);
  frames.push_back({0, args.size()});

  std::size_t pc = 0;
  try {
    for (; pc < p.code.size(); ++pc) {
      const Instruction& ins = p.code[pc];
      switch (ins.code) {
        case OpCode::LoadArg:
          stack.push_back(frame_values[frames.back().base + ins.a]);
          break;
        case OpCode::LoadConst:
          stack.push_back(p.constants[ins.a]);
          break;
        case OpCode::CallPrim:
          stack.back() = apply_builtin(static_cast<PrimitiveName>(ins.a), stack.back());
          break;
        case OpCode::CallLeaf: {
          const std::size_t first = stack.size() - ins.b;
          Value r = p.leaves[ins.a]->body(std::span<const Value>(stack.data() + first, ins.b));
          stack.resize(first);
          stack.push_back(std::move(r));
          break;
        }
        case OpCode::BinaryOp: {
          Value rhs = std::move(stack.back());
          stack.pop_back();
          stack.back() = value_binop(static_cast<ArithOp>(ins.a), stack.back(), rhs);
          break;
        }
        case OpCode::Negate:
          stack.back() = value_neg(stack.back());
          break;
        case OpCode::BeginFrame: {
          const std::size_t first = stack.size() - ins.a;
          frames.push_back({frame_values.size(), ins.a});
          for (std::size_t i = first; i < stack.size(); ++i) frame_values.push_back(std::move(stack[i]));
          stack.resize(first);
          break;
        }
        case OpCode::EndFrame:
          frame_values.resize(frames.back().base);
          frames.pop_back();
          break;
      }
    }
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(e.what()) + " (at instruction " + std::to_string(pc) + ")",
                e.position());
  }
  return std::move(stack.back());
}

std::string disassemble(const Program& p) {
  std::ostringstream out;
  out << "; arity " << p.arity.to_string() << ", " << p.constants.size() << " constant(s), "
      << p.leaves.size() << " leaf callback(s)\n";
  for (std::size_t i = 0; i < p.code.size(); ++i) {
    out << i << "\t" << to_string(p.code[i]);
    if (p.code[i].code == OpCode::LoadConst) out << "\t; " << format_value(p.constants[p.code[i].a], 17);
    if (p.code[i].code == OpCode::CallLeaf) out << "\t; " << p.leaves[p.code[i].a]->name;
    out << "\n";
  }
  return out.str();
}

std::pair<BenchReport, BenchReport> bench_backends(const std::string& label_a, const Backend& a,
                                                   const std::string& label_b, const Backend& b,
                                                   std::span<const Value> args,
                                                   std::size_t iterations) {
  if (iterations == 0) throw std::invalid_argument("bench needs at least one iteration");

  const Value warm_a = a(args);
  const Value warm_b = b(args);
  if (!same_value(warm_a, warm_b)) {
    throw Error(ErrorKind::BackendMismatch, label_a + " gave " + format_value(warm_a, 17) + " but " +
                                                label_b + " gave " + format_value(warm_b, 17));
  }

  auto time = [&](const std::string& label, const Backend& fn) {
    BenchReport r{label, iterations, {}, 0.0, {}};
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < iterations; ++i) r.result = fn(args);
    r.total = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    r.mean_ns = static_cast<double>(r.total.count()) / static_cast<double>(iterations);
    return r;
  };
  BenchReport ra = time(label_a, a);
  BenchReport rb = time(label_b, b);
  if (!same_value(ra.result, rb.result)) {
    throw Error(ErrorKind::BackendMismatch, label_a + " and " + label_b + " disagree after timing");
  }
  return {std::move(ra), std::move(rb)};
}

BenchPair bench(const FuncExpr& e, std::span<const Value> args, std::size_t iterations) {
  const Program program = compile(e);
  auto [tree, compiled] = bench_backends(
      "tree", [&](std::span<const Value> a) { return evaluate(e, a); }, "vm",
      [&](std::span<const Value> a) { return run(program, a); }, args, iterations);
  return {std::move(tree), std::move(compiled)};
}

}  // namespace funcalg::vm
