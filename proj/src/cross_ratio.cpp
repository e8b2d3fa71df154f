#include "crcurve/cross_ratio.hpp"

#include <cmath>
#include <stdexcept>

namespace crcurve {

namespace {

// Inverse of a point identified with an imaginary quaternion: v^{-1} = -v/|v|^2.
Vec3 inv(const Vec3& v) {
  const double n2 = norm2(v);
  if (n2 == 0.0) throw std::domain_error("zero vector has no inverse");
  return v / -n2;
}

}  // namespace

PlanePoint cross_ratio(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c,
                       const PlanePoint& d) {
  const PlanePoint den = (b - c) * (d - a);
  if (b == c || d == a) throw std::domain_error("degenerate cross-ratio");
  return (a - b) * (c - d) / den;
}

Quaternion cross_ratio(const SpacePoint& a, const SpacePoint& b, const SpacePoint& c,
                       const SpacePoint& d) {
  if (b == c || d == a) throw std::domain_error("degenerate cross-ratio");
  return to_quaternion(a - b) * inverse(to_quaternion(b - c)) * to_quaternion(c - d) *
         inverse(to_quaternion(d - a));
}

bool concyclic(const SpacePoint& a, const SpacePoint& b, const SpacePoint& c,
               const SpacePoint& d, double rel_tol) {
  return is_concyclic(cross_ratio(a, b, c, d), rel_tol);
}

Vec3 corner_tangent(const SpacePoint& a, const SpacePoint& b, const SpacePoint& c) {
  if (a == b || b == c) throw std::domain_error("corner tangent of coincident points");
  return inv(a - b) + inv(b - c);
}

Vec3 circumsphere_normal(const SpacePoint& a, const SpacePoint& b, const SpacePoint& c,
                         const SpacePoint& d) {
  const Quaternion cr = cross_ratio(a, b, c, d);
  if (is_concyclic(cr)) throw std::domain_error("no unique circumsphere normal");
  return cr.im;
}

PointOrInf<SpacePoint> sphere_point(const SpacePoint& a, const SpacePoint& b,
                                    const SpacePoint& c, const SpacePoint& d, double lambda,
                                    double mu) {
  const Quaternion cr = cross_ratio(a, b, c, d);
  if (is_concyclic(cr)) throw std::domain_error("sphere point requires non-concyclic points");

  // cross_ratio(a,b,c,d) = t1 * t2 with t1 = t[c,a,b]^{-1}, t2 = t[d,a,c].
  // The tangent t3 = t[f,a,c] of the sought point is coplanar with t1, t2;
  // matching [lambda*r, mu*v] gives the closed-form coefficients below.
  const Vec3 t1 = inv(corner_tangent(c, a, b));
  const Vec3 t2 = corner_tangent(d, a, c);
  const double alpha = (lambda - mu) * dot(t1, t2) / norm2(t1);
  const Vec3 t3 = t1 * alpha + t2 * mu;

  const Vec3 ac_inv = inv(a - c);
  const Vec3 g = t3 - ac_inv;
  // cancellation gate against the magnitudes actually summed into g
  const double scale =
      std::abs(alpha) * norm(t1) + std::abs(mu) * norm(t2) + norm(ac_inv);
  if (norm(g) <= 1e-13 * scale) return PointOrInf<SpacePoint>::infinity();
  return inv(g) + a;
}

}  // namespace crcurve
