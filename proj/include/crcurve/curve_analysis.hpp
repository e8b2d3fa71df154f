#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crcurve/geometry.hpp"
#include "crcurve/insertion.hpp"
#include "crcurve/points.hpp"

namespace crcurve {

// Polygonal curve in R^2 or R^3, open or closed.  Planar curves are stored
// with z = 0 and analyzed through complex arithmetic.  Any four consecutive
// vertices must be pairwise distinct; this is validated on construction.
class DiscreteCurve {
 public:
  static DiscreteCurve planar(std::vector<PlanePoint> vertices, bool closed);
  static DiscreteCurve spatial(std::vector<Vec3> vertices, bool closed);

  // Plain-text format: header line "open" or "closed", then one vertex per
  // line with 2 or 3 whitespace-separated decimal coordinates.  Lines that
  // are blank or start with '#' are skipped.
  static DiscreteCurve read(std::istream& in);
  static DiscreteCurve read_file(const std::string& path);

  int dimension() const { return dim_; }
  bool closed() const { return closed_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const;

  // Vertex access; indices wrap for closed curves.
  Vec3 vertex(int k) const;
  PlanePoint vertex2(int k) const;

  // An edge i (joining vertices i and i+1) is interior when the stencil
  // i-1 .. i+2 exists; boundary edges of open curves are not analyzable.
  bool edge_is_interior(int i) const;
  std::vector<int> interior_edges() const;

 private:
  DiscreteCurve(int dim, bool closed, std::vector<Vec3> vertices);
  void validate() const;

  int dim_ = 3;
  bool closed_ = false;
  std::vector<Vec3> vertices_;
};

struct FrenetFrame {
  Vec3 tangent;
  Vec3 normal;    // unit; discrete frames point it from p_bc toward the circle center
  Vec3 binormal;  // tangent x normal
};

// Everything the construction yields at one edge.  Optional members are
// absent where the quantity is undefined (flat frame on a degenerate circle,
// torsion on planar input, sphere on coplanar stencils, ...).
struct EdgeAnalysis {
  int edge = 0;
  EdgePointQuad<SpacePoint> points{PointOrInf<SpacePoint>::infinity(),
                                   PointOrInf<SpacePoint>::infinity(),
                                   PointOrInf<SpacePoint>::infinity(),
                                   PointOrInf<SpacePoint>::infinity()};
  CircleOrLine3 circle = Line3{};
  double kappa = 0.0;  // 1/radius, 0 for the line variant
  std::optional<FrenetFrame> frame;
  std::optional<double> torsion;
  std::optional<Sphere> osculating_sphere;
  std::optional<double> kappa_prime;
};

// Full per-edge analysis; the remaining functions are thin views of it.
// Throws std::out_of_range for non-interior edges and zigzag_error on the
// discrete singularities.
EdgeAnalysis analyze_edge(const DiscreteCurve& curve, int edge);

CircleOrLine3 curvature_circle(const DiscreteCurve& curve, int edge);
double discrete_curvature(const DiscreteCurve& curve, int edge);
FrenetFrame frenet_frame(const DiscreteCurve& curve, int edge);
double discrete_torsion(const DiscreteCurve& curve, int edge);
std::optional<Sphere> osculating_sphere(const DiscreteCurve& curve, int edge);
double discrete_kappa_prime(const DiscreteCurve& curve, int edge);

// True when the two far insertion points are antipodal on the curvature
// circle: |p_bc + p_da - 2 m| <= tol * radius.  False for the line variant.
bool is_arclength_edge(const DiscreteCurve& curve, int edge, double tol);

}  // namespace crcurve
