#include "funcalg/session.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "json.hpp"

namespace funcalg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Runs `f`, mapping any library error to `status` after reporting it.
template <class F>
int guarded(int status, F&& f, const std::function<int(const Error&, int)>& report) {
  try {
    f();
    return exit_status::kOk;
  } catch (const Error& e) {
    return report(e, status);
  }
}

}  // namespace

std::string_view to_string(BackendMode mode) {
  switch (mode) {
    case BackendMode::Tree: return "tree";
    case BackendMode::Vm: return "vm";
    case BackendMode::Check: return "check";
  }
  return "?";
}

std::optional<BackendMode> parse_backend(std::string_view text) {
  if (text == "tree") return BackendMode::Tree;
  if (text == "vm") return BackendMode::Vm;
  if (text == "check") return BackendMode::Check;
  return std::nullopt;
}

Session::Session(SessionConfig config, std::ostream& out, std::ostream& err)
    : config_(config), out_(out), err_(err) {}

int Session::report(const Error& e, int line_no, int status) {
  err_ << "error: ";
  if (!e.position()) err_ << "line " << line_no << ": ";
  err_ << e.describe() << "\n";
  return status;
}

int Session::execute_line(std::string_view line, int line_no) {
  const std::string_view text = trim(line);
  if (text.empty()) return exit_status::kOk;
  auto rep = [&](const Error& e, int status) { return report(e, line_no, status); };

  if (text.front() == ':') {
    const auto space = text.find_first_of(" \t");
    ReplCommand cmd{std::string(text.substr(1, space == std::string_view::npos ? text.npos : space - 1)),
                    std::string(space == std::string_view::npos ? std::string_view{} : trim(text.substr(space)))};
    if (cmd.name == "bench") return bench_expression(cmd.argument, line_no);
    return guarded(exit_status::kParseError, [&] { run_command(cmd, line_no); }, rep);
  }

  std::vector<Token> tokens;
  if (int s = guarded(exit_status::kParseError, [&] { tokens = tokenize(line, line_no); }, rep)) return s;

  std::size_t begin = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const bool boundary = tokens[i].is(TokenKind::Punct, ";") || tokens[i].kind == TokenKind::End;
    if (!boundary) continue;
    if (i > begin) {
      std::optional<Statement> statement;
      const std::span<const Token> chunk(tokens.data() + begin, i - begin);
      if (int s = guarded(exit_status::kParseError, [&] { statement = parse_statement(chunk, env_); }, rep)) {
        return s;
      }
      if (int s = guarded(exit_status::kEvalError, [&] { execute(std::move(*statement), line_no); }, rep)) {
        return s;
      }
    }
    begin = i + 1;
  }
  return exit_status::kOk;
}

void Session::execute(Statement statement, int /*line_no*/) {
  if (auto* def = std::get_if<FunctionDef>(&statement)) {
    env_.define(def->name, def->function);
  } else if (auto* vdef = std::get_if<ValueDef>(&statement)) {
    if (vdef->expr.arity().is_polymorphic()) {
      env_.define(vdef->name, evaluate_closed(vdef->expr));
    } else {
      env_.define(vdef->name, vdef->expr);
    }
  } else if (auto* bare = std::get_if<BareExpression>(&statement)) {
    print_expression_result(bare->expr);
  }
}

void Session::print_expression_result(const FuncExpr& e) {
  if (e.arity().is_fixed()) {
    out_ << "<function/" << e.arity().count() << "> " << print_expr(e) << "\n";
  } else {
    out_ << format_value(evaluate_closed(e), config_.digits) << "\n";
  }
}

Value Session::evaluate_closed(const FuncExpr& e) const {
  switch (config_.backend) {
    case BackendMode::Tree: return evaluate(e, std::span<const Value>{});
    case BackendMode::Vm: return vm::run(vm::compile(e), std::span<const Value>{});
    case BackendMode::Check: {
      Value tree = evaluate(e, std::span<const Value>{});
      Value compiled = vm::run(vm::compile(e), std::span<const Value>{});
      if (!same_value(tree, compiled)) {
        throw Error(ErrorKind::BackendMismatch, "tree gave " + format_value(tree, 17) + " but vm gave " +
                                                    format_value(compiled, 17));
      }
      return tree;
    }
  }
  return {};
}

void Session::run_command(const ReplCommand& cmd, int line_no) {
  if (cmd.name == "quit" || cmd.name == "q") {
    quit_ = true;
  } else if (cmd.name == "env") {
    for (const auto& [name, binding] : env_.user_bindings()) {
      if (const auto* v = std::get_if<Value>(binding)) {
        out_ << name << " = " << format_value(*v, config_.digits) << "\n";
        continue;
      }
      const FuncExpr& f = std::get<FuncExpr>(*binding);
      const auto* leaf = std::get_if<LeafNode>(&f.node().data);
      if (leaf && leaf->def->definition && leaf->def->name == name) {
        out_ << name << "(";
        for (std::size_t i = 0; i < leaf->def->params.size(); ++i) {
          out_ << (i ? ", " : "") << leaf->def->params[i];
        }
        out_ << ") = " << print_expr(FuncExpr(leaf->def->definition)) << "\n";
      } else {
        out_ << name << " = " << print_expr(f) << "\n";
      }
    }
  } else if (cmd.name == "ast") {
    out_ << print_expr(parse_expression(cmd.argument, env_, line_no)) << "\n";
  } else if (cmd.name == "backend") {
    const auto mode = parse_backend(cmd.argument);
    if (!mode) throw Error(ErrorKind::ParseError, "backend must be tree, vm or check");
    config_.backend = *mode;
  } else if (cmd.name == "digits") {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(cmd.argument, &used);
      if (used != cmd.argument.size()) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n < 1 || n > 17) throw Error(ErrorKind::ParseError, "digits must be an integer in [1, 17]");
    config_.digits = n;
  } else {
    throw Error(ErrorKind::ParseError, "unknown command ':" + cmd.name + "'");
  }
}

int Session::bench_expression(std::string_view text, int line_no) {
  auto rep = [&](const Error& e, int status) { return report(e, line_no, status); };
  std::optional<FuncExpr> target;
  std::vector<Value> args;
  if (int s = guarded(
          exit_status::kParseError,
          [&] {
            FuncExpr e = parse_expression(text, env_, line_no);
            const auto* call = std::get_if<ApplyNode>(&e.node().data);
            if (call && e.arity().is_polymorphic()) {
              target = call->callee;
              for (const FuncExpr& a : call->args) args.push_back(evaluate(a, std::span<const Value>{}));
            } else if (e.arity().is_polymorphic()) {
              target = e;
            } else {
              throw Error(ErrorKind::ArityMismatch, "give arguments to benchmark a function, e.g. (f + g)(1)");
            }
          },
          rep)) {
    return s;
  }
  return guarded(
      exit_status::kEvalError,
      [&] {
        const vm::BenchPair r = vm::bench(*target, args, config_.bench_iterations);
        out_ << (config_.bench_format == BenchFormat::Json ? render_bench_json(r.tree, r.vm, config_.digits)
                                                            : render_bench_table(r.tree, r.vm, config_.digits));
      },
      rep);
}

int run_repl(Session& session, std::istream& in, bool interactive) {
  std::string line;
  int line_no = 0;
  while (!session.quit_requested()) {
    if (interactive) std::cout << "> " << std::flush;
    if (!std::getline(in, line)) break;
    session.execute_line(line, ++line_no);
  }
  return exit_status::kOk;
}

int eval_once(Session& session, std::string_view text) { return session.execute_line(text, 1); }

int run_script(Session& session, const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    session.error_stream() << "error: " << to_string(ErrorKind::FileNotFound) << ": " << path.string() << "\n";
    return exit_status::kFileNotFound;
  }
  std::string line;
  int line_no = 0;
  while (!session.quit_requested() && std::getline(file, line)) {
    if (int s = session.execute_line(line, ++line_no)) return s;
  }
  return exit_status::kOk;
}

std::string render_bench_table(const vm::BenchReport& tree, const vm::BenchReport& compiled, int digits) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-8s %12s %14s %14s  %s\n", "backend", "iterations", "total_ms", "mean_ns",
                "result");
  out += buf;
  for (const vm::BenchReport* r : {&tree, &compiled}) {
    std::snprintf(buf, sizeof buf, "%-8s %12zu %14.3f %14.1f  ", r->backend.c_str(), r->iterations,
                  static_cast<double>(r->total.count()) / 1e6, r->mean_ns);
    out += buf;
    out += format_value(r->result, digits) + "\n";
  }
  return out;
}

std::string render_bench_json(const vm::BenchReport& tree, const vm::BenchReport& compiled, int digits) {
  nlohmann::json doc = nlohmann::json::array();
  for (const vm::BenchReport* r : {&tree, &compiled}) {
    doc.push_back({{"backend", r->backend},
                   {"iterations", r->iterations},
                   {"total_ns", r->total.count()},
                   {"mean_ns", r->mean_ns},
                   {"result", format_value(r->result, digits)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace funcalg
