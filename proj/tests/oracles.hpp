// Test-only oracles, kept independent of the library's computation paths:
// component-wise quaternion arithmetic, circumcenter/circumsphere via direct
// elimination, Richardson-extrapolated differentiation, and random inputs.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "crcurve/vec3.hpp"

namespace oracle {

inline double ulps(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / (scale * std::numeric_limits<double>::epsilon());
}

// Quaternion product in flat (w, x, y, z) components, written out longhand.
using Q4 = std::array<double, 4>;

inline Q4 qmul(const Q4& a, const Q4& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

inline Q4 qinv(const Q4& a) {
  const double n2 = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
  return {a[0] / n2, -a[1] / n2, -a[2] / n2, -a[3] / n2};
}

inline Q4 from_point(const crcurve::Vec3& v) { return {0.0, v.x, v.y, v.z}; }

// Circumcenter of a planar triangle from the two perpendicular-bisector
// equations, solved by direct 2x2 elimination.
inline std::complex<double> circumcenter2(std::complex<double> a, std::complex<double> b,
                                          std::complex<double> c) {
  const double ax = a.real(), ay = a.imag();
  const double a11 = 2 * (b.real() - ax), a12 = 2 * (b.imag() - ay);
  const double a21 = 2 * (c.real() - ax), a22 = 2 * (c.imag() - ay);
  const double r1 = std::norm(b) - std::norm(a);
  const double r2 = std::norm(c) - std::norm(a);
  const double det = a11 * a22 - a12 * a21;
  return {(r1 * a22 - r2 * a12) / det, (a11 * r2 - a21 * r1) / det};
}

// Circumsphere of four points via Gaussian elimination with partial pivoting
// on the three bisector-plane equations.
inline bool circumsphere4(const crcurve::Vec3& a, const crcurve::Vec3& b,
                          const crcurve::Vec3& c, const crcurve::Vec3& d,
                          crcurve::Vec3& center, double& radius) {
  double m[3][4];
  const crcurve::Vec3 pts[3] = {b, c, d};
  for (int i = 0; i < 3; ++i) {
    m[i][0] = 2 * (pts[i].x - a.x);
    m[i][1] = 2 * (pts[i].y - a.y);
    m[i][2] = 2 * (pts[i].z - a.z);
    m[i][3] = crcurve::norm2(pts[i]) - crcurve::norm2(a);
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (std::abs(m[piv][col]) < 1e-14) return false;
    for (int k = 0; k < 4; ++k) std::swap(m[col][k], m[piv][k]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  center = {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
  radius = crcurve::norm(center - a);
  return true;
}

// Richardson-extrapolated central differences for first to third
// derivatives of a vector-valued function.
inline crcurve::Vec3 fd(const std::function<crcurve::Vec3(double)>& f, double t, int order,
                        double h) {
  auto stencil = [&](double hh) -> crcurve::Vec3 {
    switch (order) {
      case 1: return (f(t + hh) - f(t - hh)) / (2 * hh);
      case 2: return (f(t + hh) - 2.0 * f(t) + f(t - hh)) / (hh * hh);
      default:
        return (f(t + 2 * hh) - 2.0 * f(t + hh) + 2.0 * f(t - hh) - f(t - 2 * hh)) /
               (2 * hh * hh * hh);
    }
  };
  // Two Richardson levels on the O(h^2) stencils: error drops to O(h^6).
  const crcurve::Vec3 d1 = stencil(h), d2 = stencil(h / 2), d4 = stencil(h / 4);
  const crcurve::Vec3 r1 = (4.0 * d2 - d1) / 3.0;
  const crcurve::Vec3 r2 = (4.0 * d4 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

// Inversion in the unit sphere centered at z0 (a Moebius transformation).
inline std::complex<double> invert(std::complex<double> z, std::complex<double> z0) {
  return z0 + std::conj(1.0 / (z - z0));
}

inline crcurve::Vec3 invert(const crcurve::Vec3& x, const crcurve::Vec3& c) {
  const crcurve::Vec3 d = x - c;
  return c + d / crcurve::norm2(d);
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  std::complex<double> complex_in_box(double r = 1.0) {
    return {uniform(-r, r), uniform(-r, r)};
  }
  crcurve::Vec3 vec_in_box(double r = 1.0) {
    return {uniform(-r, r), uniform(-r, r), uniform(-r, r)};
  }
};

}  // namespace oracle
