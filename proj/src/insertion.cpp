#include "crcurve/insertion.hpp"

#include <cmath>
#include <stdexcept>

namespace crcurve {

namespace {

// Denominators smaller than this (relative to the magnitudes of their
// summands) are treated as exact cancellation: the inserted point is at
// infinity and the circle through the quad degenerates to a line.
constexpr double infinity_tol = 1e-13;

// Principal complex square root with a deterministic branch on the negative
// real axis: imag == -0.0 is normalized to +0.0 so that -s maps to +i*sqrt(s).
PlanePoint principal_sqrt(PlanePoint z) {
  if (z.imag() == 0.0) z = PlanePoint(z.real(), 0.0);
  return std::sqrt(z);
}

void require_distinct(bool distinct) {
  if (!distinct) throw std::domain_error("insertion requires pairwise distinct points");
}

template <class P>
EdgePointQuad<P> edge_point_quad(const P& a, const P& b, const P& c, const P& d) {
  auto labeled = [](const char* which, const P& w, const P& x, const P& y, const P& z) {
    try {
      return insert_point(w, x, y, z);
    } catch (const zigzag_error& e) {
      throw zigzag_error(std::string(which) + ": " + e.what(), e.cross_ratio());
    }
  };
  return {labeled("p_ab", d, a, b, c), labeled("p_bc", a, b, c, d),
          labeled("p_cd", b, c, d, a), labeled("p_da", c, d, a, b)};
}

}  // namespace

PointOrInf<PlanePoint> insert_point(const PlanePoint& a, const PlanePoint& b,
                                    const PlanePoint& c, const PlanePoint& d) {
  require_distinct(a != b && a != c && a != d && b != c && b != d && c != d);
  const PlanePoint s = principal_sqrt(cross_ratio(c, a, b, d));
  const PlanePoint u = (b - a) * s;
  const PlanePoint den = u + (c - a);
  if (std::abs(den) <= infinity_tol * (std::abs(u) + std::abs(c - a)))
    return PointOrInf<PlanePoint>::infinity();
  return (c * u + b * (c - a)) / den;
}

PointOrInf<SpacePoint> insert_point(const SpacePoint& a, const SpacePoint& b,
                                    const SpacePoint& c, const SpacePoint& d) {
  require_distinct(a != b && a != c && a != d && b != c && b != d && c != d);
  const Quaternion q = cross_ratio(c, a, b, d);
  Quaternion s;
  try {
    s = principal_sqrt(q);
  } catch (const negative_real_sqrt_error&) {
    throw zigzag_error("zigzag quadrilateral: negative real cross-ratio", q);
  }
  // Factor order as written; nothing here commutes.
  const Quaternion w = to_quaternion(b - a) * inverse(to_quaternion(c - a)) * s;
  const Quaternion den = w + Quaternion{1.0};
  if (norm(den) <= infinity_tol * (norm(w) + 1.0)) return PointOrInf<SpacePoint>::infinity();
  const Quaternion f = inverse(den) * (w * to_quaternion(c) + to_quaternion(b));
  // f is purely imaginary up to rounding; the real part is discarded.
  return f.im;
}

EdgePointQuad<PlanePoint> edge_points(const PlanePoint& a, const PlanePoint& b,
                                      const PlanePoint& c, const PlanePoint& d) {
  return edge_point_quad(a, b, c, d);
}

EdgePointQuad<SpacePoint> edge_points(const SpacePoint& a, const SpacePoint& b,
                                      const SpacePoint& c, const SpacePoint& d) {
  return edge_point_quad(a, b, c, d);
}

}  // namespace crcurve
