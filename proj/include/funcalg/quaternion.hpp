#pragma once

#include <cmath>

namespace funcalg {

/// Real quaternion w + xi + yj + zk.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }

  // Hamilton product: ij = k, jk = i, ki = j, and each reversed pair negates.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  // Right division: a * b^-1.
  friend constexpr Quaternion operator/(const Quaternion& a, const Quaternion& b) {
    const double n = b.norm2();
    const Quaternion inv{b.w / n, -b.x / n, -b.y / n, -b.z / n};
    return a * inv;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

}  // namespace funcalg
