#include "funcalg/value.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "funcalg/error.hpp"

namespace funcalg {

namespace {

bool same_real(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

double real_op(ArithOp op, double a, double b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Pow: return std::pow(a, b);
  }
  return std::nan("");
}

Complex complex_pow(Complex a, Complex b) {
  if (a == Complex(0.0, 0.0)) {
    if (b == Complex(0.0, 0.0)) return {1.0, 0.0};
    if (b.imag() == 0.0 && b.real() > 0.0) return {0.0, 0.0};
  }
  // principal branch
  return std::exp(b * std::log(a));
}

Complex complex_op(ArithOp op, Complex a, Complex b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Pow: return complex_pow(a, b);
  }
  return {std::nan(""), std::nan("")};
}

// Real value of an exponent that carries no imaginary part, if any.
std::optional<double> real_part_only(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Scalar: return v.scalar();
    case ValueKind::Complex:
      if (v.complex().imag() == 0.0) return v.complex().real();
      return std::nullopt;
    case ValueKind::Quaternion: {
      const Quaternion& q = v.quaternion();
      if (q.x == 0.0 && q.y == 0.0 && q.z == 0.0) return q.w;
      return std::nullopt;
    }
    case ValueKind::Vector: return std::nullopt;
  }
  return std::nullopt;
}

Quaternion quaternion_pow(const Quaternion& base, const Value& exponent) {
  const auto e = real_part_only(exponent);
  if (!e || !std::isfinite(*e) || *e < 0.0 || std::floor(*e) != *e || *e > 2147483647.0) {
    throw Error(ErrorKind::UnsupportedPow,
                "quaternion powers need a non-negative integer real exponent");
  }
  const auto n = static_cast<long>(*e);
  if (n == 0) return Quaternion(1.0);
  Quaternion result = base;
  for (long i = 1; i < n; ++i) result = result * base;
  return result;
}

int rank(ValueKind k) {
  switch (k) {
    case ValueKind::Scalar: return 0;
    case ValueKind::Complex: return 1;
    case ValueKind::Quaternion: return 2;
    case ValueKind::Vector: return -1;
  }
  return -1;
}

Complex to_complex(const Value& v) {
  return v.is_scalar() ? Complex(v.scalar(), 0.0) : v.complex();
}

Quaternion to_quaternion(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Scalar: return Quaternion(v.scalar());
    case ValueKind::Complex: return {v.complex().real(), v.complex().imag(), 0.0, 0.0};
    case ValueKind::Quaternion: return v.quaternion();
    case ValueKind::Vector: break;
  }
  throw Error(ErrorKind::KindMismatch, "vector cannot be promoted to a quaternion");
}

Value vector_binop(ArithOp op, const Value& a, const Value& b) {
  if (!(a.is_vector() || a.is_scalar()) || !(b.is_vector() || b.is_scalar())) {
    throw Error(ErrorKind::KindMismatch, std::string("cannot combine ") +
                                             std::string(to_string(a.kind())) + " with " +
                                             std::string(to_string(b.kind())));
  }
  std::vector<double> out;
  if (a.is_vector() && b.is_vector()) {
    const auto& xs = a.vector();
    const auto& ys = b.vector();
    if (xs.size() != ys.size()) {
      throw Error(ErrorKind::LengthMismatch, "vectors of length " + std::to_string(xs.size()) +
                                                 " and " + std::to_string(ys.size()));
    }
    out.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out.push_back(real_op(op, xs[i], ys[i]));
  } else if (a.is_vector()) {
    const double s = b.scalar();
    out.reserve(a.vector().size());
    for (double x : a.vector()) out.push_back(real_op(op, x, s));
  } else {
    const double s = a.scalar();
    out.reserve(b.vector().size());
    for (double y : b.vector()) out.push_back(real_op(op, s, y));
  }
  return Value(std::move(out));
}

double real_kernel(PrimitiveName p, double x) {
  switch (p) {
    case PrimitiveName::Sin: return std::sin(x);
    case PrimitiveName::Cos: return std::cos(x);
    case PrimitiveName::Tan: return std::tan(x);
    case PrimitiveName::Asin: return std::asin(x);
    case PrimitiveName::Acos: return std::acos(x);
    case PrimitiveName::Atan: return std::atan(x);
    case PrimitiveName::Sinh: return std::sinh(x);
    case PrimitiveName::Cosh: return std::cosh(x);
    case PrimitiveName::Tanh: return std::tanh(x);
    case PrimitiveName::Exp: return std::exp(x);
    case PrimitiveName::Log: return std::log(x);
    case PrimitiveName::Sqrt: return std::sqrt(x);
    case PrimitiveName::Abs: return std::fabs(x);
    case PrimitiveName::Floor: return std::floor(x);
    case PrimitiveName::Ceiling: return std::ceil(x);
    case PrimitiveName::Cumsum:
    case PrimitiveName::Cumprod: break;
  }
  throw Error(ErrorKind::UnsupportedKind,
              std::string(canonical_name(p)) + " needs a vector argument");
}

[[noreturn]] void unsupported(PrimitiveName p, ValueKind k) {
  throw Error(ErrorKind::UnsupportedKind, std::string(canonical_name(p)) + " is not defined for " +
                                              std::string(to_string(k)) + " values");
}

std::string signed_component(double c, int digits) {
  if (std::signbit(c) && !std::isnan(c)) return "-" + format_real(-c, digits);
  return "+" + format_real(c, digits);
}

}  // namespace

char op_symbol(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return '+';
    case ArithOp::Sub: return '-';
    case ArithOp::Mul: return '*';
    case ArithOp::Div: return '/';
    case ArithOp::Pow: return '^';
  }
  return '?';
}

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Scalar: return "scalar";
    case ValueKind::Vector: return "vector";
    case ValueKind::Complex: return "complex";
    case ValueKind::Quaternion: return "quaternion";
  }
  return "?";
}

Value::Value(std::vector<double> xs) : data_(std::move(xs)) {
  if (std::get<std::vector<double>>(data_).empty()) {
    throw Error(ErrorKind::LengthMismatch, "vectors must have at least one element");
  }
}

bool same_value(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ValueKind::Scalar: return same_real(a.scalar(), b.scalar());
    case ValueKind::Vector: {
      const auto& xs = a.vector();
      const auto& ys = b.vector();
      if (xs.size() != ys.size()) return false;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!same_real(xs[i], ys[i])) return false;
      }
      return true;
    }
    case ValueKind::Complex:
      return same_real(a.complex().real(), b.complex().real()) &&
             same_real(a.complex().imag(), b.complex().imag());
    case ValueKind::Quaternion: {
      const auto& p = a.quaternion();
      const auto& q = b.quaternion();
      return same_real(p.w, q.w) && same_real(p.x, q.x) && same_real(p.y, q.y) &&
             same_real(p.z, q.z);
    }
  }
  return false;
}

Value value_binop(ArithOp op, const Value& a, const Value& b) {
  if (a.is_vector() || b.is_vector()) return vector_binop(op, a, b);

  switch (std::max(rank(a.kind()), rank(b.kind()))) {
    case 0: return real_op(op, a.scalar(), b.scalar());
    case 1: return complex_op(op, to_complex(a), to_complex(b));
    default: break;
  }
  const Quaternion p = to_quaternion(a);
  switch (op) {
    case ArithOp::Add: return p + to_quaternion(b);
    case ArithOp::Sub: return p - to_quaternion(b);
    case ArithOp::Mul: return p * to_quaternion(b);
    case ArithOp::Div: return p / to_quaternion(b);
    case ArithOp::Pow:
      if (!a.is_quaternion()) {
        throw Error(ErrorKind::UnsupportedPow, "quaternion exponents are not supported");
      }
      return quaternion_pow(p, b);
  }
  return a;
}

Value value_neg(const Value& a) {
  switch (a.kind()) {
    case ValueKind::Scalar: return -a.scalar();
    case ValueKind::Vector: {
      std::vector<double> out(a.vector());
      for (double& x : out) x = -x;
      return Value(std::move(out));
    }
    case ValueKind::Complex: return -a.complex();
    case ValueKind::Quaternion: return -a.quaternion();
  }
  return a;
}

Value apply_builtin(PrimitiveName name, const Value& a) {
  switch (a.kind()) {
    case ValueKind::Scalar:
      if (name == PrimitiveName::Cumsum || name == PrimitiveName::Cumprod) {
        unsupported(name, a.kind());
      }
      return real_kernel(name, a.scalar());

    case ValueKind::Vector: {
      std::vector<double> out(a.vector());
      if (name == PrimitiveName::Cumsum) {
        for (std::size_t i = 1; i < out.size(); ++i) out[i] = out[i - 1] + out[i];
      } else if (name == PrimitiveName::Cumprod) {
        for (std::size_t i = 1; i < out.size(); ++i) out[i] = out[i - 1] * out[i];
      } else {
        for (double& x : out) x = real_kernel(name, x);
      }
      return Value(std::move(out));
    }

    case ValueKind::Complex: {
      const Complex c = a.complex();
      switch (name) {
        case PrimitiveName::Exp: return std::exp(c);
        case PrimitiveName::Log: return std::log(c);
        case PrimitiveName::Sqrt: return std::sqrt(c);
        case PrimitiveName::Sin: return std::sin(c);
        case PrimitiveName::Cos: return std::cos(c);
        case PrimitiveName::Abs: return std::abs(c);
        default: unsupported(name, a.kind());
      }
    }

    case ValueKind::Quaternion:
      if (name == PrimitiveName::Abs) return a.quaternion().norm();
      unsupported(name, a.kind());
  }
  unsupported(name, a.kind());
}

std::string format_real(double x, int digits) {
  if (std::isnan(x)) return "NaN";
  if (std::isinf(x)) return x > 0 ? "Inf" : "-Inf";
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string format_value(const Value& v, int digits) {
  switch (v.kind()) {
    case ValueKind::Scalar: return format_real(v.scalar(), digits);
    case ValueKind::Vector: {
      std::string out = "[";
      const auto& xs = v.vector();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += format_real(xs[i], digits);
      }
      return out + "]";
    }
    case ValueKind::Complex:
      return format_real(v.complex().real(), digits) + signed_component(v.complex().imag(), digits) +
             "i";
    case ValueKind::Quaternion: {
      const Quaternion& q = v.quaternion();
      return format_real(q.w, digits) + signed_component(q.x, digits) + "i" +
             signed_component(q.y, digits) + "j" + signed_component(q.z, digits) + "k";
    }
  }
  return {};
}

std::string shortest_repr(double x) {
  char buf[64];
  for (int p = 1; p <= 17; ++p) {
    std::snprintf(buf, sizeof buf, "%.*g", p, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

}  // namespace funcalg
