#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "crcurve/curve_analysis.hpp"
#include "crcurve/geometry.hpp"
#include "crcurve/points.hpp"

namespace crcurve {

// Parametric curve with closed-form derivatives up to third order.
// Planar curves keep the third component identically zero.  The parameter
// domain is [0, 2*pi] for all registry curves.
struct SmoothCurve {
  std::string name;
  int dim = 3;
  std::function<Vec3(double)> position;
  std::function<Vec3(double)> derivative1;
  std::function<Vec3(double)> derivative2;
  std::function<Vec3(double)> derivative3;
};

// The seven benchmark curves: epitrochoid, logspiral, helix, helicalspiral,
// coil, trefoil, viviani.
const std::vector<SmoothCurve>& curve_registry();
const SmoothCurve* find_curve(std::string_view name);

// Curvature: ||s' x s''|| / ||s'||^3 in space, signed det(s', s'')/||s'||^3
// in the plane.
double smooth_curvature(const SmoothCurve& c, double t);

// Torsion via -<s' x s'', s'''> / ||s' x s''||^2; cross-checked internally
// against the normal-projection form <s' x s''', N> / (kappa ||s'||^4).
double smooth_torsion(const SmoothCurve& c, double t);

FrenetFrame smooth_frame(const SmoothCurve& c, double t);

// Osculating sphere center s + N/kappa + (kappa'/(kappa^2 tau)) B, with
// kappa' the arclength derivative of the curvature.  Throws for planar
// curves and wherever the torsion vanishes (plane variant).
Sphere smooth_osculating_sphere(const SmoothCurve& c, double t);

// Arclength derivative of the curvature, d kappa / ds.
double smooth_kappa_prime(const SmoothCurve& c, double t);

// The point s - 2 s'^2 / s'' of a planar curve: lies on the curvature circle
// and encodes the parametrization Moebius-invariantly.
PlanePoint tilde_point(const SmoothCurve& c, double t);

// Sampling gamma_k = s(u + (2k - 1) eps) for k in [k_min, k_max].
DiscreteCurve sample_stencil(const SmoothCurve& c, double u, double eps, int k_min, int k_max);

// Whole-domain sampling gamma_k = s(k eps), k = 0 .. floor(2 pi/eps), as an
// open polygon; edge k then has midpoint parameter (k + 1/2) eps.
DiscreteCurve sample_uniform(const SmoothCurve& c, double eps);

inline double edge_midpoint_parameter(int edge, double eps) { return (edge + 0.5) * eps; }

}  // namespace crcurve
