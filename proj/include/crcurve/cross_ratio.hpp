#pragma once

#include "crcurve/points.hpp"
#include "crcurve/quaternion.hpp"

namespace crcurve {

// Four points are treated as concyclic when the cross-ratio is real up to
// this relative tolerance (scale-invariant).
inline constexpr double concyclic_tol = 1e-9;

// Complex cross-ratio (a-b)(c-d) / ((b-c)(d-a)).  Requires b != c and d != a.
PlanePoint cross_ratio(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c,
                       const PlanePoint& d);

// Quaternionic cross-ratio (a-b)(b-c)^{-1}(c-d)(d-a)^{-1} of points in R^3.
// Real if and only if the four points are concyclic.
Quaternion cross_ratio(const SpacePoint& a, const SpacePoint& b, const SpacePoint& c,
                       const SpacePoint& d);

inline bool is_concyclic(const Quaternion& cr, double rel_tol = concyclic_tol) {
  return norm(cr.im) <= rel_tol * norm(cr);
}

bool concyclic(const SpacePoint& a, const SpacePoint& b, const SpacePoint& c,
               const SpacePoint& d, double rel_tol = concyclic_tol);

// Corner tangent t[a,b,c] = (a-b)^{-1} + (b-c)^{-1}.  Placed at the middle
// point of the permuted triple, it is in oriented tangential contact with the
// circumcircle; homogeneous of degree -1 in the points.
Vec3 corner_tangent(const SpacePoint& a, const SpacePoint& b, const SpacePoint& c);

// Imaginary part of cross_ratio(a,b,c,d): the circumsphere normal at a.
// Requires a non-concyclic quadruple.
Vec3 circumsphere_normal(const SpacePoint& a, const SpacePoint& b, const SpacePoint& c,
                         const SpacePoint& d);

// The point f with cross_ratio(a,b,c,f) = [lambda*r, mu*v], where
// [r, v] = cross_ratio(a,b,c,d).  Sweeping (lambda, mu) parametrizes the
// circumsphere of the quadruple; (1, 1) reproduces d.
PointOrInf<SpacePoint> sphere_point(const SpacePoint& a, const SpacePoint& b,
                                    const SpacePoint& c, const SpacePoint& d, double lambda,
                                    double mu);

}  // namespace crcurve
