#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "funcalg/session.hpp"
#include "json.hpp"

using namespace funcalg;

namespace {

struct Harness {
  std::ostringstream out;
  std::ostringstream err;
  Session session;

  explicit Harness(SessionConfig config = {}) : session(config, out, err) {}

  std::string repl(const std::string& input) {
    std::istringstream in(input);
    run_repl(session, in, false);
    return out.str();
  }
};

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("repl: pointwise sums over a range") {
  Harness h;
  const std::string out = h.repl(
      "f(x) = x^2\n"
      "g(x) = 1/(1-x)\n"
      "(f + g)(2)\n"
      "f + g\n"
      ":quit\n"
      "f(100)\n");
  CHECK(out == "3\n<function/1> (f + g)\n");
  CHECK(h.err.str().empty());
}

TEST_CASE("repl: semicolons, env and ast") {
  Harness h;
  const std::string out = h.repl("a = 2; h(x, y) = x*y + a\nh(3, 4)\n:env\n:ast -h(1, 2)\n");
  CHECK(out == "14\na = 2\nh(x, y) = ((x * y) + 2)\n(-h(1, 2))\n");
}

TEST_CASE("repl: digits and backend commands") {
  Harness h;
  const std::string out = h.repl("pi\n:digits 3\npi\n:backend check\n1:3 / 3\n:digits 0\n:backend fast\n");
  CHECK(out == "3.141593\n3.14\n[0.333 0.667 1]\n");
  CHECK(h.session.config().backend == BackendMode::Check);
  CHECK(h.err.str().find("digits must be") != std::string::npos);
  CHECK(h.err.str().find("backend must be") != std::string::npos);
}

TEST_CASE("repl: values of every kind") {
  Harness h;
  CHECK(h.repl("(1 + qi) * (2 + qj)\nSqrt(-1 + 0*im)\n[1, 2] * 2\nNaN\n-1/0\n") ==
        "2+2i+1j+1k\n0+1i\n[2 4]\nNaN\n-Inf\n");
}

TEST_CASE("errors keep the session alive") {
  Harness h;
  const std::string out = h.repl("f(x) = x\nf + nope\n[1,2] + [1,2,3]\nf(5)\n");
  CHECK(out == "5\n");
  const std::string err = h.err.str();
  CHECK(err.find("error: line 2, col 5: unknown identifier") != std::string::npos);
  CHECK(err.find("error: line 3: length mismatch") != std::string::npos);
}

TEST_CASE("eval_once exit statuses") {
  {
    Harness h;
    CHECK(eval_once(h.session, "Sin(0) + 1") == exit_status::kOk);
    CHECK(h.out.str() == "1\n");
  }
  {
    Harness h;
    CHECK(eval_once(h.session, "1 +") == exit_status::kParseError);
  }
  {
    Harness h;
    CHECK(eval_once(h.session, "1 $ 2") == exit_status::kParseError);
  }
  {
    Harness h;
    CHECK(eval_once(h.session, "Sin = 3") == exit_status::kParseError);
  }
  {
    Harness h;
    CHECK(eval_once(h.session, "qi ^ 0.5") == exit_status::kEvalError);
  }
}

TEST_CASE("scripts") {
  {
    Harness h;
    CHECK(run_script(h.session, write_temp("funcalg_empty.fa", "")) == exit_status::kOk);
    CHECK(h.out.str().empty());
  }
  {
    Harness h;
    const auto path = write_temp("funcalg_bad.fa", "f(x) = x + 1\nf(1)\nf(y)\nf(3)\n");
    CHECK(run_script(h.session, path) == exit_status::kParseError);
    CHECK(h.out.str() == "2\n");
    CHECK(h.err.str().find("line 3") != std::string::npos);
  }
  {
    Harness h;
    CHECK(run_script(h.session, "/nonexistent/funcalg.fa") == exit_status::kFileNotFound);
    CHECK(h.err.str().find("file not found") != std::string::npos);
  }
}

TEST_CASE("bench output formats") {
  SessionConfig config;
  config.bench_iterations = 50;
  {
    Harness h(config);
    CHECK(h.session.execute_line(":bench (Sin + Cos)(0.5)", 1) == exit_status::kOk);
    const std::string out = h.out.str();
    CHECK(out.rfind("backend", 0) == 0);
    CHECK(out.find("\ntree ") != std::string::npos);
    CHECK(out.find("\nvm ") != std::string::npos);
  }
  config.bench_format = BenchFormat::Json;
  {
    Harness h(config);
    REQUIRE(h.session.bench_expression("2 * pi", 1) == exit_status::kOk);
    const auto doc = nlohmann::json::parse(h.out.str());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["backend"] == "tree");
    CHECK(doc[1]["backend"] == "vm");
    CHECK(doc[0]["iterations"] == 50);
    CHECK(doc[0]["result"] == doc[1]["result"]);
    CHECK(doc[0]["result"] == "6.283185");
  }
  {
    Harness h(config);
    CHECK(h.session.bench_expression("Sin", 1) == exit_status::kParseError);
    CHECK(h.session.bench_expression("Cumsum(2)", 1) == exit_status::kEvalError);
  }
}
