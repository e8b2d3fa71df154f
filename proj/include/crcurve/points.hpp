#pragma once

#include <complex>
#include <stdexcept>

#include "crcurve/vec3.hpp"

namespace crcurve {

// Planar points live in the complex plane, spatial points in R^3.
using PlanePoint = std::complex<double>;
using SpacePoint = Vec3;

// A point that may be the tagged point at infinity.  Degenerate circle
// configurations are recognized exactly through this tag, never through
// large coordinates.
template <class P>
class PointOrInf {
 public:
  PointOrInf(const P& p) : value_(p), infinite_(false) {}  // NOLINT(implicit)
  static PointOrInf infinity() {
    PointOrInf r{P{}};
    r.infinite_ = true;
    return r;
  }

  bool infinite() const { return infinite_; }
  const P& point() const {
    if (infinite_) throw std::logic_error("point at infinity has no coordinates");
    return value_;
  }

 private:
  P value_;
  bool infinite_;
};

inline SpacePoint embed_xy(const PlanePoint& z) { return {z.real(), z.imag(), 0.0}; }

inline PointOrInf<SpacePoint> embed_xy(const PointOrInf<PlanePoint>& p) {
  if (p.infinite()) return PointOrInf<SpacePoint>::infinity();
  return embed_xy(p.point());
}

}  // namespace crcurve
