#include <unistd.h>

#include <iostream>

#include "CLI11.hpp"
#include "funcalg/session.hpp"

int main(int argc, char** argv) {
  using namespace funcalg;

  CLI::App app{"funcalg: arithmetic on functions, with a tree-walking and a bytecode backend"};
  std::string mode;
  std::string eval_text;
  std::vector<std::string> scripts;
  std::string backend = "tree";
  int digits = 7;
  std::size_t bench_iterations = 100000;
  std::string bench_format = "table";

  app.add_option("mode", mode, "Run the interactive loop after any scripts")->check(CLI::IsMember({"repl"}));
  auto* eval_opt = app.add_option("-e,--eval", eval_text, "Evaluate one line and exit");
  app.add_option("-f,--script", scripts, "Execute a script first (repeatable)");
  app.add_option("--backend", backend, "Evaluation backend")->check(CLI::IsMember({"tree", "vm", "check"}));
  app.add_option("--digits", digits, "Significant digits when printing")->check(CLI::Range(1, 17));
  auto* bench_opt = app.add_option("--bench", bench_iterations,
                                   "Iterations for :bench; with --eval, benchmark that expression")
                        ->check(CLI::PositiveNumber);
  app.add_option("--bench-format", bench_format, "Benchmark report format")
      ->check(CLI::IsMember({"table", "json"}));
  CLI11_PARSE(app, argc, argv);

  SessionConfig config;
  config.backend = *parse_backend(backend);
  config.digits = digits;
  config.bench_iterations = bench_iterations;
  config.bench_format = bench_format == "json" ? BenchFormat::Json : BenchFormat::Table;

  Session session(config, std::cout, std::cerr);
  for (const std::string& path : scripts) {
    if (int status = run_script(session, path)) return status;
  }
  if (*eval_opt) {
    if (*bench_opt) return session.bench_expression(eval_text, 1);
    return eval_once(session, eval_text);
  }
  if (mode == "repl" || scripts.empty()) {
    return run_repl(session, std::cin, isatty(STDIN_FILENO) != 0);
  }
  return exit_status::kOk;
}
