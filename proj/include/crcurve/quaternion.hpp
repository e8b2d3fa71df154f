#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

#include "crcurve/vec3.hpp"

namespace crcurve {

// Hamiltonian quaternion, stored as real part + imaginary 3-vector.
// Points of R^3 are identified with purely imaginary quaternions [0, v];
// the complex plane embeds as [re, (im, 0, 0)].
struct Quaternion {
  double re = 0.0;
  Vec3 im;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re_, const Vec3& im_) : re(re_), im(im_) {}
  constexpr explicit Quaternion(double re_) : re(re_) {}

  constexpr Quaternion operator+(const Quaternion& o) const { return {re + o.re, im + o.im}; }
  constexpr Quaternion operator-(const Quaternion& o) const { return {re - o.re, im - o.im}; }
  constexpr Quaternion operator-() const { return {-re, -im}; }
  constexpr Quaternion operator*(double s) const { return {re * s, im * s}; }
  constexpr Quaternion operator/(double s) const { return {re / s, im / s}; }

  constexpr bool operator==(const Quaternion& o) const { return re == o.re && im == o.im; }
  constexpr bool operator!=(const Quaternion& o) const { return !(*this == o); }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

// Hamilton product [r,v][s,w] = [rs - <v,w>, rw + sv + v x w].
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return {p.re * q.re - dot(p.im, q.im),
          q.im * p.re + p.im * q.re + cross(p.im, q.im)};
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }

constexpr Quaternion conj(const Quaternion& q) { return {q.re, -q.im}; }

constexpr double norm2(const Quaternion& q) { return q.re * q.re + norm2(q.im); }

inline double norm(const Quaternion& q) { return std::sqrt(norm2(q)); }

// q^{-1} = conj(q) / |q|^2.  The zero quaternion has no inverse.
inline Quaternion inverse(const Quaternion& q) {
  const double n2 = norm2(q);
  if (n2 == 0.0) throw std::domain_error("zero quaternion has no inverse");
  return conj(q) / n2;
}

// Polar representation q = |q| [cos(angle), axis sin(angle)], angle in [0, pi],
// |axis| = 1.  The axis is left zero for real quaternions (angle 0 or pi).
struct QuaternionPolar {
  double abs = 0.0;
  double angle = 0.0;
  Vec3 axis;
};

inline QuaternionPolar polar(const Quaternion& q) {
  QuaternionPolar p;
  p.abs = norm(q);
  const double im_len = norm(q.im);
  // atan2(|im|, re) is stable near angle 0 and pi.
  p.angle = std::atan2(im_len, q.re);
  if (im_len > 0.0) p.axis = q.im / im_len;
  return p;
}

// Raised by principal_sqrt on negative real quaternions, where the square
// root has no distinguished imaginary axis.  Downstream this is the "zigzag"
// singularity of concyclic quadrilaterals.
class negative_real_sqrt_error : public std::domain_error {
 public:
  explicit negative_real_sqrt_error(const Quaternion& q)
      : std::domain_error("sqrt of negative real quaternion is not unique"), value_(q) {}
  const Quaternion& value() const { return value_; }

 private:
  Quaternion value_;
};

// Relative gate deciding when a quaternion counts as a negative real.
inline constexpr double negative_real_tol = 1e-12;

inline bool is_negative_real(const Quaternion& q) {
  return q.re < 0.0 && norm(q.im) <= negative_real_tol * norm(q);
}

// Principal square root sqrt(q) = sqrt(|q|) [cos(angle/2), axis sin(angle/2)].
// sqrt(0) = 0.  Throws negative_real_sqrt_error on negative reals.
inline Quaternion principal_sqrt(const Quaternion& q) {
  if (is_negative_real(q)) throw negative_real_sqrt_error(q);
  const QuaternionPolar p = polar(q);
  if (p.abs == 0.0) return Quaternion{};
  const double r = std::sqrt(p.abs);
  return {r * std::cos(p.angle / 2.0), p.axis * (r * std::sin(p.angle / 2.0))};
}

// Embedding of C into H: x + iy  <->  [x, (y, 0, 0)].
constexpr Quaternion to_quaternion(const std::complex<double>& z) {
  return {z.real(), {z.imag(), 0.0, 0.0}};
}

// Identification of R^3 with the imaginary quaternions: v <-> [0, v].
constexpr Quaternion to_quaternion(const Vec3& v) { return {0.0, v}; }

constexpr std::complex<double> complex_part(const Quaternion& q) { return {q.re, q.im.x}; }

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "[" << q.re << ", " << q.im << "]";
}

}  // namespace crcurve
