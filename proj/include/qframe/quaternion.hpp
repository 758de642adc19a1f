#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>

#include "qframe/error.hpp"

namespace qframe {

/// Element r0 + r1 i + r2 j + r3 k of the real quaternion division ring
/// (Hamilton convention: i^2 = j^2 = k^2 = ijk = -1).
struct Quaternion {
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re) : r0(re) {}  // NOLINT: real subfield embeds implicitly
  constexpr Quaternion(double a, double b, double c, double d) : r0(a), r1(b), r2(c), r3(d) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  [[nodiscard]] constexpr double real() const { return r0; }
  [[nodiscard]] constexpr double norm2() const { return r0 * r0 + r1 * r1 + r2 * r2 + r3 * r3; }

  constexpr Quaternion& operator+=(const Quaternion& q) {
    r0 += q.r0; r1 += q.r1; r2 += q.r2; r3 += q.r3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& q) {
    r0 -= q.r0; r1 -= q.r1; r2 -= q.r2; r3 -= q.r3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    r0 *= s; r1 *= s; r2 *= s; r3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator-(const Quaternion& q) { return {-q.r0, -q.r1, -q.r2, -q.r3}; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }

/// Hamilton product.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return {p.r0 * q.r0 - p.r1 * q.r1 - p.r2 * q.r2 - p.r3 * q.r3,
          p.r0 * q.r1 + p.r1 * q.r0 + p.r2 * q.r3 - p.r3 * q.r2,
          p.r0 * q.r2 - p.r1 * q.r3 + p.r2 * q.r0 + p.r3 * q.r1,
          p.r0 * q.r3 + p.r1 * q.r2 - p.r2 * q.r1 + p.r3 * q.r0};
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }

constexpr Quaternion conj(const Quaternion& q) { return {q.r0, -q.r1, -q.r2, -q.r3}; }

inline double modulus(const Quaternion& q) {
  const double s = std::max({std::abs(q.r0), std::abs(q.r1), std::abs(q.r2), std::abs(q.r3)});
  if (s == 0.0 || !std::isfinite(s)) return std::sqrt(q.norm2());
  const Quaternion u{q.r0 / s, q.r1 / s, q.r2 / s, q.r3 / s};
  return s * std::sqrt(u.norm2());
}

inline constexpr double kZeroThreshold = 1e-300;

/// Two-sided inverse conj(q)/|q|^2.
inline Quaternion inverse(const Quaternion& q) {
  if (modulus(q) < kZeroThreshold) throw Error(ErrorKind::ZeroDivision, "inverse of zero quaternion");
  // Scale first so |q|^2 cannot underflow for tiny but nonzero q.
  const double s = std::max({std::abs(q.r0), std::abs(q.r1), std::abs(q.r2), std::abs(q.r3)});
  const Quaternion u = q * (1.0 / s);
  return conj(u) * (1.0 / (u.norm2() * s));
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.r0 << ", " << q.r1 << ", " << q.r2 << ", " << q.r3 << ')';
}

}  // namespace qframe
