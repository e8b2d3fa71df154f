#include "crcurve/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace crcurve {

namespace {

constexpr double collinear_tol = 1e-13;
constexpr double coplanar_tol = 1e-12;

}  // namespace

CircleOrLine2 circumcircle(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  const PlanePoint u = a - c;
  const PlanePoint v = b - c;
  // Twice the signed triangle area.
  const double area2 = std::imag(u * std::conj(v));
  if (std::abs(area2) <= collinear_tol * std::abs(u) * std::abs(v)) {
    const PlanePoint d = std::abs(u) >= std::abs(v) ? u : (a - b);
    return Line2{a, d / std::abs(d)};
  }
  // Work relative to the centroid: the |.|^2 terms otherwise cancel badly for
  // small triangles far from the origin.
  const PlanePoint g = (a + b + c) / 3.0;
  const PlanePoint ta = a - g, tb = b - g, tc = c - g;
  const PlanePoint num = ta * (std::norm(tb) - std::norm(tc)) +
                         tb * (std::norm(tc) - std::norm(ta)) +
                         tc * (std::norm(ta) - std::norm(tb));
  const PlanePoint den =
      (ta - tc) * std::conj(tb - tc) - std::conj(ta - tc) * (tb - tc);
  const PlanePoint m = g + num / den;
  return Circle2{m, std::abs(a - m)};
}

CircleOrLine3 circumcircle(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 u = a - c;
  const Vec3 v = b - c;
  const Vec3 n = cross(u, v);
  const double nn = norm(n);
  if (nn <= collinear_tol * norm(u) * norm(v)) {
    const Vec3 d = norm2(u) >= norm2(v) ? u : (a - b);
    return Line3{a, normalized(d)};
  }
  const Vec3 m = c + cross(v * norm2(u) - u * norm2(v), n) / (2.0 * nn * nn);
  return Circle3{m, norm(a - m), n / nn};
}

PlanePoint circumcenter(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  const CircleOrLine2 k = circumcircle(a, b, c);
  if (std::holds_alternative<Line2>(k))
    throw std::domain_error("degenerate circumcircle: collinear points");
  return std::get<Circle2>(k).center;
}

Vec3 circumcenter(const Vec3& a, const Vec3& b, const Vec3& c) {
  const CircleOrLine3 k = circumcircle(a, b, c);
  if (std::holds_alternative<Line3>(k))
    throw std::domain_error("degenerate circumcircle: collinear points");
  return std::get<Circle3>(k).center;
}

std::optional<Sphere> circumsphere(const Vec3& a, const Vec3& b, const Vec3& c,
                                   const Vec3& d) {
  const Vec3 u = b - a;
  const Vec3 v = c - a;
  const Vec3 w = d - a;
  const double det = dot(u, cross(v, w));
  if (std::abs(det) <= coplanar_tol * norm(u) * norm(v) * norm(w)) return std::nullopt;
  const Vec3 x =
      (cross(v, w) * norm2(u) + cross(w, u) * norm2(v) + cross(u, v) * norm2(w)) / (2.0 * det);
  return Sphere{a + x, norm(x)};
}

}  // namespace crcurve
