#include "crcurve/smooth_curves.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace crcurve {

namespace {

using std::cos;
using std::exp;
using std::sin;

SmoothCurve make_epitrochoid() {
  SmoothCurve c;
  c.name = "epitrochoid";
  c.dim = 2;
  c.position = [](double t) {
    return Vec3{6 * cos(t) - 3 * cos(6 * t), 6 * sin(t) - 3 * sin(6 * t), 0};
  };
  c.derivative1 = [](double t) {
    return Vec3{-6 * sin(t) + 18 * sin(6 * t), 6 * cos(t) - 18 * cos(6 * t), 0};
  };
  c.derivative2 = [](double t) {
    return Vec3{-6 * cos(t) + 108 * cos(6 * t), -6 * sin(t) + 108 * sin(6 * t), 0};
  };
  c.derivative3 = [](double t) {
    return Vec3{6 * sin(t) - 648 * sin(6 * t), -6 * cos(t) + 648 * cos(6 * t), 0};
  };
  return c;
}

SmoothCurve make_logspiral() {
  SmoothCurve c;
  c.name = "logspiral";
  c.dim = 2;
  const double a = 0.5;
  c.position = [a](double t) {
    const double e = exp(a * t);
    return Vec3{e * cos(t), e * sin(t), 0};
  };
  c.derivative1 = [a](double t) {
    const double e = exp(a * t);
    return Vec3{e * (a * cos(t) - sin(t)), e * (a * sin(t) + cos(t)), 0};
  };
  c.derivative2 = [a](double t) {
    const double e = exp(a * t);
    const double u = a * a - 1, v = 2 * a;
    return Vec3{e * (u * cos(t) - v * sin(t)), e * (u * sin(t) + v * cos(t)), 0};
  };
  c.derivative3 = [a](double t) {
    const double e = exp(a * t);
    const double u = a * a * a - 3 * a, v = 3 * a * a - 1;
    return Vec3{e * (u * cos(t) - v * sin(t)), e * (u * sin(t) + v * cos(t)), 0};
  };
  return c;
}

SmoothCurve make_helix() {
  SmoothCurve c;
  c.name = "helix";
  c.dim = 3;
  const double a = 4.0, b = 0.5;
  c.position = [a, b](double t) { return Vec3{cos(a * t), sin(a * t), b * t}; };
  c.derivative1 = [a, b](double t) { return Vec3{-a * sin(a * t), a * cos(a * t), b}; };
  c.derivative2 = [a](double t) {
    return Vec3{-a * a * cos(a * t), -a * a * sin(a * t), 0};
  };
  c.derivative3 = [a](double t) {
    const double a3 = a * a * a;
    return Vec3{a3 * sin(a * t), -a3 * cos(a * t), 0};
  };
  return c;
}

SmoothCurve make_helicalspiral() {
  SmoothCurve c;
  c.name = "helicalspiral";
  c.dim = 3;
  const double a = 0.4, w = 4.0, b = 4.0;
  c.position = [a, w, b](double t) {
    const double e = exp(a * t);
    return Vec3{e * cos(w * t), e * sin(w * t), b * t};
  };
  c.derivative1 = [a, w, b](double t) {
    const double e = exp(a * t);
    return Vec3{e * (a * cos(w * t) - w * sin(w * t)), e * (a * sin(w * t) + w * cos(w * t)), b};
  };
  c.derivative2 = [a, w](double t) {
    const double e = exp(a * t);
    const double u = a * a - w * w, v = 2 * a * w;
    return Vec3{e * (u * cos(w * t) - v * sin(w * t)), e * (u * sin(w * t) + v * cos(w * t)), 0};
  };
  c.derivative3 = [a, w](double t) {
    const double e = exp(a * t);
    const double u = a * a * a - 3 * a * w * w, v = 3 * a * a * w - w * w * w;
    return Vec3{e * (u * cos(w * t) - v * sin(w * t)), e * (u * sin(w * t) + v * cos(w * t)), 0};
  };
  return c;
}

SmoothCurve make_coil() {
  SmoothCurve c;
  c.name = "coil";
  c.dim = 3;
  const double a = 2.5, b = 20.0;
  c.position = [a, b](double t) {
    const double r = a + sin(b * t);
    return Vec3{r * cos(t), r * sin(t), cos(b * t)};
  };
  c.derivative1 = [a, b](double t) {
    const double r = a + sin(b * t), r1 = b * cos(b * t);
    return Vec3{r1 * cos(t) - r * sin(t), r1 * sin(t) + r * cos(t), -b * sin(b * t)};
  };
  c.derivative2 = [a, b](double t) {
    const double r = a + sin(b * t), r1 = b * cos(b * t), r2 = -b * b * sin(b * t);
    return Vec3{r2 * cos(t) - 2 * r1 * sin(t) - r * cos(t),
                r2 * sin(t) + 2 * r1 * cos(t) - r * sin(t), -b * b * cos(b * t)};
  };
  c.derivative3 = [a, b](double t) {
    const double r = a + sin(b * t), r1 = b * cos(b * t);
    const double r2 = -b * b * sin(b * t), r3 = -b * b * b * cos(b * t);
    return Vec3{r3 * cos(t) - 3 * r2 * sin(t) - 3 * r1 * cos(t) + r * sin(t),
                r3 * sin(t) + 3 * r2 * cos(t) - 3 * r1 * sin(t) - r * cos(t),
                b * b * b * sin(b * t)};
  };
  return c;
}

SmoothCurve make_trefoil() {
  SmoothCurve c;
  c.name = "trefoil";
  c.dim = 3;
  c.position = [](double t) {
    return Vec3{sin(t) + 2 * sin(2 * t), cos(t) - 2 * cos(2 * t), -sin(3 * t)};
  };
  c.derivative1 = [](double t) {
    return Vec3{cos(t) + 4 * cos(2 * t), -sin(t) + 4 * sin(2 * t), -3 * cos(3 * t)};
  };
  c.derivative2 = [](double t) {
    return Vec3{-sin(t) - 8 * sin(2 * t), -cos(t) + 8 * cos(2 * t), 9 * sin(3 * t)};
  };
  c.derivative3 = [](double t) {
    return Vec3{-cos(t) - 16 * cos(2 * t), sin(t) - 16 * sin(2 * t), 27 * cos(3 * t)};
  };
  return c;
}

SmoothCurve make_viviani() {
  SmoothCurve c;
  c.name = "viviani";
  c.dim = 3;
  const double a = 5.0;
  c.position = [a](double t) {
    return Vec3{a * (1 + cos(2 * t)), a * sin(2 * t), 2 * a * sin(t)};
  };
  c.derivative1 = [a](double t) {
    return Vec3{-2 * a * sin(2 * t), 2 * a * cos(2 * t), 2 * a * cos(t)};
  };
  c.derivative2 = [a](double t) {
    return Vec3{-4 * a * cos(2 * t), -4 * a * sin(2 * t), -2 * a * sin(t)};
  };
  c.derivative3 = [a](double t) {
    return Vec3{8 * a * sin(2 * t), -8 * a * cos(2 * t), -2 * a * cos(t)};
  };
  return c;
}

}  // namespace

const std::vector<SmoothCurve>& curve_registry() {
  static const std::vector<SmoothCurve> curves = {
      make_epitrochoid(), make_logspiral(), make_helix(),  make_helicalspiral(),
      make_coil(),        make_trefoil(),   make_viviani()};
  return curves;
}

const SmoothCurve* find_curve(std::string_view name) {
  for (const SmoothCurve& c : curve_registry())
    if (c.name == name) return &c;
  return nullptr;
}

double smooth_curvature(const SmoothCurve& c, double t) {
  const Vec3 d1 = c.derivative1(t);
  const Vec3 d2 = c.derivative2(t);
  const double speed = norm(d1);
  if (speed == 0.0) throw std::domain_error("singular parametrization point");
  if (c.dim == 2) return (d1.x * d2.y - d1.y * d2.x) / (speed * speed * speed);
  return norm(cross(d1, d2)) / (speed * speed * speed);
}

double smooth_torsion(const SmoothCurve& c, double t) {
  if (c.dim == 2) return 0.0;
  const Vec3 d1 = c.derivative1(t);
  const Vec3 d2 = c.derivative2(t);
  const Vec3 d3 = c.derivative3(t);
  const Vec3 n = cross(d1, d2);
  if (norm2(n) == 0.0) throw std::domain_error("torsion undefined at vanishing curvature");
  const double tau = -dot(n, d3) / norm2(n);
  // Same quantity through the normal projection; the two routes must agree.
  const double kappa = smooth_curvature(c, t);
  const Vec3 normal = cross(n / norm(n), d1 / norm(d1));
  const double tau2 = dot(cross(d1, d3), normal) / (kappa * norm2(d1) * norm2(d1));
  if (std::abs(tau - tau2) > 1e-8 * std::max(1.0, std::abs(tau)))
    throw std::logic_error("torsion cross-check failed");
  return tau;
}

FrenetFrame smooth_frame(const SmoothCurve& c, double t) {
  const Vec3 d1 = c.derivative1(t);
  const double speed = norm(d1);
  if (speed == 0.0) throw std::domain_error("frame undefined at singular point");
  const Vec3 tangent = d1 / speed;
  if (c.dim == 2) {
    const Vec3 normal{-tangent.y, tangent.x, 0.0};  // i * s'/|s'|
    return {tangent, normal, cross(tangent, normal)};
  }
  const Vec3 n = cross(d1, c.derivative2(t));
  if (norm2(n) == 0.0) throw std::domain_error("frame undefined at vanishing curvature");
  const Vec3 binormal = n / norm(n);
  return {tangent, cross(binormal, tangent), binormal};
}

double smooth_kappa_prime(const SmoothCurve& c, double t) {
  const Vec3 d1 = c.derivative1(t);
  const Vec3 d2 = c.derivative2(t);
  const Vec3 d3 = c.derivative3(t);
  const double speed = norm(d1);
  if (c.dim == 2) {
    // d/dt of det(s', s'') / |s'|^3, then by ds = |s'| dt.
    const double det = d1.x * d2.y - d1.y * d2.x;
    const double det_dot = d1.x * d3.y - d1.y * d3.x;
    const double kdot =
        (det_dot * speed * speed - 3.0 * det * dot(d1, d2)) / std::pow(speed, 5);
    return kdot / speed;
  }
  const Vec3 n = cross(d1, d2);
  const double a = norm(n);
  if (a == 0.0) throw std::domain_error("kappa' undefined at vanishing curvature");
  const double a_dot = dot(n, cross(d1, d3)) / a;
  const double b = speed * speed * speed;
  const double b_dot = 3.0 * speed * dot(d1, d2);
  return (a_dot * b - a * b_dot) / (b * b) / speed;
}

Sphere smooth_osculating_sphere(const SmoothCurve& c, double t) {
  if (c.dim == 2)
    throw std::domain_error("osculating sphere degenerates to a plane for planar curves");
  const double kappa = smooth_curvature(c, t);
  const double tau = smooth_torsion(c, t);
  if (tau == 0.0)
    throw std::domain_error("osculating sphere degenerates to a plane at vanishing torsion");
  const FrenetFrame f = smooth_frame(c, t);
  const double kp = smooth_kappa_prime(c, t);
  const Vec3 center =
      c.position(t) + f.normal / kappa + f.binormal * (kp / (kappa * kappa * tau));
  return {center, norm(center - c.position(t))};
}

PlanePoint tilde_point(const SmoothCurve& c, double t) {
  if (c.dim != 2) throw std::domain_error("tilde point is defined for planar curves");
  const Vec3 d1 = c.derivative1(t);
  const Vec3 d2 = c.derivative2(t);
  const PlanePoint s1{d1.x, d1.y};
  const PlanePoint s2{d2.x, d2.y};
  if (s2 == PlanePoint{}) throw std::domain_error("tilde point undefined at inflection");
  const Vec3 p = c.position(t);
  return PlanePoint{p.x, p.y} - 2.0 * s1 * s1 / s2;
}

DiscreteCurve sample_stencil(const SmoothCurve& c, double u, double eps, int k_min, int k_max) {
  std::vector<Vec3> vertices;
  for (int k = k_min; k <= k_max; ++k) vertices.push_back(c.position(u + (2 * k - 1) * eps));
  if (c.dim == 2) {
    std::vector<PlanePoint> flat;
    flat.reserve(vertices.size());
    for (const Vec3& v : vertices) flat.emplace_back(v.x, v.y);
    return DiscreteCurve::planar(std::move(flat), false);
  }
  return DiscreteCurve::spatial(std::move(vertices), false);
}

DiscreteCurve sample_uniform(const SmoothCurve& c, double eps) {
  const int k_max = static_cast<int>(std::floor(2.0 * std::numbers::pi / eps));
  // gamma_k = c(k eps): each edge's four-point stencil is then centered at the
  // edge midpoint (k + 1/2) eps with half-step eps/2.
  return sample_stencil(c, eps / 2.0, eps / 2.0, 0, k_max);
}

}  // namespace crcurve
