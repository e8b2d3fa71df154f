#pragma once

#include <optional>
#include <variant>

#include "crcurve/points.hpp"
#include "crcurve/vec3.hpp"

namespace crcurve {

struct Circle2 {
  PlanePoint center;
  double radius = 0.0;
};

// Line through `point` with unit direction `dir`; the degenerate form of a
// circle through the point at infinity.
struct Line2 {
  PlanePoint point;
  PlanePoint dir;
};

struct Circle3 {
  Vec3 center;
  double radius = 0.0;
  Vec3 normal;  // unit normal of the carrier plane
};

struct Line3 {
  Vec3 point;
  Vec3 dir;  // unit
};

struct Sphere {
  Vec3 center;
  double radius = 0.0;
};

using CircleOrLine2 = std::variant<Circle2, Line2>;
using CircleOrLine3 = std::variant<Circle3, Line3>;

// Circle through three points, or the line through them when collinear.
CircleOrLine2 circumcircle(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c);
CircleOrLine3 circumcircle(const Vec3& a, const Vec3& b, const Vec3& c);

// Circumcenter of a non-degenerate triangle; throws std::domain_error on
// collinear input.
PlanePoint circumcenter(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c);
Vec3 circumcenter(const Vec3& a, const Vec3& b, const Vec3& c);

// Circumsphere of four points; empty when they are coplanar (the sphere
// degenerates to a plane).
std::optional<Sphere> circumsphere(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

inline Circle3 embed_xy(const Circle2& k) {
  return {embed_xy(k.center), k.radius, {0.0, 0.0, 1.0}};
}

inline Line3 embed_xy(const Line2& l) { return {embed_xy(l.point), embed_xy(l.dir)}; }

inline CircleOrLine3 embed_xy(const CircleOrLine2& k) {
  if (std::holds_alternative<Circle2>(k)) return embed_xy(std::get<Circle2>(k));
  return embed_xy(std::get<Line2>(k));
}

}  // namespace crcurve
