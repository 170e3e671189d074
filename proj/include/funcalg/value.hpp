#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "funcalg/primitive_name.hpp"
#include "funcalg/quaternion.hpp"

namespace funcalg {

using Complex = std::complex<double>;

enum class ArithOp { Add, Sub, Mul, Div, Pow };

char op_symbol(ArithOp op);

enum class ValueKind { Scalar, Vector, Complex, Quaternion };

std::string_view to_string(ValueKind kind);

/// A member of the numeric tower. Immutable once built.
///
/// Vectors are never empty; constructing one from an empty sequence throws.
class Value {
 public:
  Value() : data_(0.0) {}
  Value(double x) : data_(x) {}  // NOLINT(google-explicit-constructor)
  Value(std::vector<double> xs);  // NOLINT(google-explicit-constructor)
  Value(Complex c) : data_(c) {}  // NOLINT(google-explicit-constructor)
  Value(Quaternion q) : data_(q) {}  // NOLINT(google-explicit-constructor)

  ValueKind kind() const { return static_cast<ValueKind>(data_.index()); }

  bool is_scalar() const { return kind() == ValueKind::Scalar; }
  bool is_vector() const { return kind() == ValueKind::Vector; }
  bool is_complex() const { return kind() == ValueKind::Complex; }
  bool is_quaternion() const { return kind() == ValueKind::Quaternion; }

  double scalar() const { return std::get<double>(data_); }
  const std::vector<double>& vector() const { return std::get<std::vector<double>>(data_); }
  Complex complex() const { return std::get<Complex>(data_); }
  const Quaternion& quaternion() const { return std::get<Quaternion>(data_); }

  using Payload = std::variant<double, std::vector<double>, Complex, Quaternion>;
  const Payload& payload() const { return data_; }

 private:
  Payload data_;
};

/// NaN-class equality: same kind, same shape, and every component either
/// compares equal or is NaN on both sides. Distinguishes +0 from -0 only
/// through ordinary comparison (it doesn't).
bool same_value(const Value& a, const Value& b);

Value value_binop(ArithOp op, const Value& a, const Value& b);
Value value_neg(const Value& a);

/// Scalar kernel for a primitive; elementwise over vectors except the prefix
/// scans cumsum/cumprod, which need a vector.
Value apply_builtin(PrimitiveName name, const Value& a);

/// `digits` significant digits; "Inf", "-Inf", "NaN" for non-finite reals.
std::string format_real(double x, int digits = 7);
std::string format_value(const Value& v, int digits = 7);

/// Shortest decimal text that reads back as exactly `x` (finite x only).
std::string shortest_repr(double x);

}  // namespace funcalg
