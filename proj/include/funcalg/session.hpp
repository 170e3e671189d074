#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "funcalg/parser.hpp"
#include "funcalg/vm.hpp"

namespace funcalg {

enum class BackendMode { Tree, Vm, Check };

std::string_view to_string(BackendMode mode);
std::optional<BackendMode> parse_backend(std::string_view text);

enum class BenchFormat { Table, Json };

struct SessionConfig {
  BackendMode backend = BackendMode::Tree;
  int digits = 7;
  std::size_t bench_iterations = 100000;
  BenchFormat bench_format = BenchFormat::Table;
};

/// Exit statuses shared by the CLI entry points.
namespace exit_status {
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kEvalError = 2;
inline constexpr int kFileNotFound = 3;
}  // namespace exit_status

/// One interactive or scripted session: an Env plus output streams.
class Session {
 public:
  Session(SessionConfig config, std::ostream& out, std::ostream& err);

  /// Runs every `;`-separated statement on one source line, printing results.
  /// Errors are reported on the error stream and stop the line; the return
  /// value is the matching exit status.
  int execute_line(std::string_view line, int line_no);

  /// Evaluates a closed (polymorphic) expression with the configured backend.
  Value evaluate_closed(const FuncExpr& e) const;

  /// Benchmarks `text`, a call expression with constant arguments or a closed
  /// expression, and prints the report.
  int bench_expression(std::string_view text, int line_no);

  bool quit_requested() const { return quit_; }
  const SessionConfig& config() const { return config_; }
  Env& env() { return env_; }
  std::ostream& error_stream() { return err_; }

 private:
  void execute(Statement statement, int line_no);
  void run_command(const ReplCommand& cmd, int line_no);
  void print_expression_result(const FuncExpr& e);
  int report(const Error& e, int line_no, int status);

  SessionConfig config_;
  Env env_;
  std::ostream& out_;
  std::ostream& err_;
  bool quit_ = false;
};

/// Read-eval-print loop until `:quit` or end of input. Always returns 0.
int run_repl(Session& session, std::istream& in, bool interactive);

int eval_once(Session& session, std::string_view text);

/// Executes a script file line by line; stops at the first error.
int run_script(Session& session, const std::filesystem::path& path);

std::string render_bench_table(const vm::BenchReport& tree, const vm::BenchReport& compiled, int digits);
std::string render_bench_json(const vm::BenchReport& tree, const vm::BenchReport& compiled, int digits);

}  // namespace funcalg
