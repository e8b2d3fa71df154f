#pragma once

#include <string>

#include "crcurve/cross_ratio.hpp"
#include "crcurve/points.hpp"
#include "crcurve/quaternion.hpp"

namespace crcurve {

// Concyclic "zigzag" quadrilateral: the quaternionic insertion rule hits the
// square root of a negative real cross-ratio and is undefined.  Carries the
// offending cross-ratio and, when raised from edge_points, which of the four
// insertions failed.
class zigzag_error : public std::domain_error {
 public:
  zigzag_error(const std::string& what, const Quaternion& cr)
      : std::domain_error(what), cross_ratio_(cr) {}
  const Quaternion& cross_ratio() const { return cross_ratio_; }

 private:
  Quaternion cross_ratio_;
};

// Moebius-invariant point insertion: the point f with
// cross_ratio(c, a, b, f) = -sqrt(cross_ratio(c, a, b, d)).
//
// The complex rule uses the principal complex square root (well defined for
// every nonzero complex number, negative reals included); a vanishing
// denominator yields the tagged point at infinity.  The quaternionic rule
// throws zigzag_error when the cross-ratio is a negative real.
PointOrInf<PlanePoint> insert_point(const PlanePoint& a, const PlanePoint& b,
                                    const PlanePoint& c, const PlanePoint& d);
PointOrInf<SpacePoint> insert_point(const SpacePoint& a, const SpacePoint& b,
                                    const SpacePoint& c, const SpacePoint& d);

// The four cyclic insertions attached to a quadrilateral a, b, c, d.
// When all four are finite they are concyclic with cross-ratio -1; each pair
// (x, p_x?) forms harmonic quadruples with the generating points.
template <class P>
struct EdgePointQuad {
  PointOrInf<P> ab, bc, cd, da;
};

EdgePointQuad<PlanePoint> edge_points(const PlanePoint& a, const PlanePoint& b,
                                      const PlanePoint& c, const PlanePoint& d);
EdgePointQuad<SpacePoint> edge_points(const SpacePoint& a, const SpacePoint& b,
                                      const SpacePoint& c, const SpacePoint& d);

}  // namespace crcurve
