#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "funcalg/error.hpp"
#include "funcalg/parser.hpp"
#include "funcalg/registry.hpp"
#include "funcalg/session.hpp"
#include "funcalg/vm.hpp"

namespace py = pybind11;
using namespace funcalg;

namespace {

Value to_value(const py::handle& obj) {
  if (py::isinstance<Quaternion>(obj)) return obj.cast<Quaternion>();
  if (py::isinstance<py::bool_>(obj)) throw py::type_error("booleans are not numbers here");
  if (py::isinstance<py::int_>(obj) || py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (PyComplex_Check(obj.ptr())) return obj.cast<Complex>();
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    auto xs = obj.cast<std::vector<double>>();
    if (xs.empty()) throw py::value_error("vectors must not be empty");
    return Value(std::move(xs));
  }
  throw py::type_error("cannot convert " + std::string(py::str(py::type::handle_of(obj))) + " to a value");
}

py::object from_value(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Scalar: return py::float_(v.scalar());
    case ValueKind::Vector: return py::cast(v.vector());
    case ValueKind::Complex: return py::cast(v.complex());
    case ValueKind::Quaternion: return py::cast(v.quaternion());
  }
  return py::none();
}

FuncExpr to_expr(const py::handle& obj) {
  if (py::isinstance<FuncExpr>(obj)) return obj.cast<FuncExpr>();
  return const_expr(to_value(obj));
}

std::vector<Value> to_values(const py::args& args) {
  std::vector<Value> out;
  for (const py::handle& a : args) out.push_back(to_value(a));
  return out;
}

py::object call(const FuncExpr& f, const py::args& args) {
  std::vector<Arg> list;
  for (const py::handle& a : args) {
    if (py::isinstance<FuncExpr>(a)) {
      list.emplace_back(a.cast<FuncExpr>());
    } else {
      list.emplace_back(to_value(a));
    }
  }
  Result r = apply(f, std::move(list));
  if (auto* v = std::get_if<Value>(&r)) return from_value(*v);
  return py::cast(std::get<FuncExpr>(r));
}

py::object arity_or_none(const FuncExpr& f) {
  return f.arity().is_fixed() ? py::object(py::int_(f.arity().count())) : py::none();
}

py::dict report_dict(const vm::BenchReport& r) {
  py::dict d;
  d["backend"] = r.backend;
  d["iterations"] = r.iterations;
  d["total_ns"] = r.total.count();
  d["mean_ns"] = r.mean_ns;
  d["result"] = from_value(r.result);
  return d;
}

struct PySession {
  std::ostringstream out;
  std::ostringstream err;
  Session session;

  explicit PySession(SessionConfig config) : session(config, out, err) {}

  py::tuple execute(const std::string& text) {
    out.str({});
    err.str({});
    int status = exit_status::kOk;
    int line_no = 0;
    std::istringstream lines(text);
    std::string line;
    while (status == exit_status::kOk && !session.quit_requested() && std::getline(lines, line)) {
      status = session.execute_line(line, ++line_no);
    }
    return py::make_tuple(status, out.str(), err.str());
  }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pointwise arithmetic on functions, with a tree-walking evaluator and a stack VM.";

  static py::exception<Error> error_type(m, "FuncalgError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, e.describe().c_str());
    }
  });

  py::class_<Quaternion>(m, "Quaternion")
      .def(py::init<double, double, double, double>(), py::arg("w") = 0.0, py::arg("x") = 0.0,
           py::arg("y") = 0.0, py::arg("z") = 0.0)
      .def_readwrite("w", &Quaternion::w)
      .def_readwrite("x", &Quaternion::x)
      .def_readwrite("y", &Quaternion::y)
      .def_readwrite("z", &Quaternion::z)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("conj", &Quaternion::conj)
      .def("norm", &Quaternion::norm)
      .def("__repr__", [](const Quaternion& q) { return "Quaternion(" + format_value(q, 17) + ")"; })
      .def("__str__", [](const Quaternion& q) { return format_value(q, 7); });

  py::class_<FuncExpr>(m, "Function")
      .def_property_readonly("arity", &arity_or_none, "Argument count, or None when any count is accepted.")
      .def("__call__", &call)
      .def("__add__", [](const FuncExpr& a, py::object b) { return a + to_expr(b); })
      .def("__radd__", [](const FuncExpr& a, py::object b) { return to_expr(b) + a; })
      .def("__sub__", [](const FuncExpr& a, py::object b) { return a - to_expr(b); })
      .def("__rsub__", [](const FuncExpr& a, py::object b) { return to_expr(b) - a; })
      .def("__mul__", [](const FuncExpr& a, py::object b) { return a * to_expr(b); })
      .def("__rmul__", [](const FuncExpr& a, py::object b) { return to_expr(b) * a; })
      .def("__truediv__", [](const FuncExpr& a, py::object b) { return a / to_expr(b); })
      .def("__rtruediv__", [](const FuncExpr& a, py::object b) { return to_expr(b) / a; })
      .def("__pow__", [](const FuncExpr& a, py::object b) { return pow(a, to_expr(b)); })
      .def("__rpow__", [](const FuncExpr& a, py::object b) { return pow(to_expr(b), a); })
      .def("__neg__", [](const FuncExpr& a) { return -a; })
      .def("evaluate", [](const FuncExpr& f, py::args args) { return from_value(evaluate(f, to_values(args))); })
      .def("structurally_equal", &structurally_equal)
      .def("node_count", &node_count)
      .def("__str__", &print_expr)
      .def("__repr__", [](const FuncExpr& f) { return "<Function " + print_expr(f) + ">"; });

  m.def("builtin", [](const std::string& name) { return builtin(name); }, py::arg("name"),
        "Registry primitive by name, case-insensitive (\"sin\", \"Cumsum\", ...).");
  m.def("const", [](py::object v) { return const_expr(to_value(v)); }, py::arg("value"));
  m.def(
      "lift",
      [](const std::string& name, int arity, py::function body) {
        return lift_function(name, arity, [body](std::span<const Value> args) {
          py::tuple t(args.size());
          for (std::size_t i = 0; i < args.size(); ++i) t[i] = from_value(args[i]);
          return to_value(body(*t));
        });
      },
      py::arg("name"), py::arg("arity"), py::arg("body"), "Wraps a Python callable as a named function.");
  m.def(
      "parse",
      [](const std::string& text, const py::dict& bindings) {
        Env env;
        for (const auto& [k, v] : bindings) {
          const auto name = k.cast<std::string>();
          if (py::isinstance<FuncExpr>(v)) {
            env.define(name, v.cast<FuncExpr>());
          } else {
            env.define(name, to_value(v));
          }
        }
        return parse_expression(text, env);
      },
      py::arg("text"), py::arg("bindings") = py::dict(), "Parses an expression over the given bindings.");
  m.def("format_value", [](py::object v, int digits) { return format_value(to_value(v), digits); },
        py::arg("value"), py::arg("digits") = 7);

  py::class_<vm::Program>(m, "Program")
      .def_property_readonly("size", [](const vm::Program& p) { return p.code.size(); })
      .def_readonly("max_stack", &vm::Program::max_stack)
      .def("run", [](const vm::Program& p, py::args args) { return from_value(vm::run(p, to_values(args))); })
      .def("disassemble", &vm::disassemble);
  m.def("compile", &vm::compile, py::arg("function"));
  m.def(
      "bench",
      [](const FuncExpr& f, const py::tuple& args, std::size_t iterations) {
        std::vector<Value> values;
        for (const py::handle& a : args) values.push_back(to_value(a));
        const vm::BenchPair r = vm::bench(f, values, iterations);
        return py::make_tuple(report_dict(r.tree), report_dict(r.vm));
      },
      py::arg("function"), py::arg("args"), py::arg("iterations") = 100000,
      "Times the tree walker against the compiled program; results must agree.");

  py::class_<PySession>(m, "Session")
      .def(py::init([](const std::string& backend, int digits) {
             const auto mode = parse_backend(backend);
             if (!mode) throw py::value_error("backend must be tree, vm or check");
             if (digits < 1 || digits > 17) throw py::value_error("digits must be in [1, 17]");
             SessionConfig config;
             config.backend = *mode;
             config.digits = digits;
             return std::make_unique<PySession>(config);
           }),
           py::arg("backend") = "tree", py::arg("digits") = 7)
      .def("execute", &PySession::execute, py::arg("text"),
           "Runs source lines; returns (status, stdout, stderr) and stops at the first error.");
}
