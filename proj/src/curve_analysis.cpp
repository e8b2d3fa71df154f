#include "crcurve/curve_analysis.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "crcurve/cross_ratio.hpp"

namespace crcurve {

namespace {

// The fourth edge point must sit on the circle through the chosen three; a
// larger relative residual means the input was numerically meaningless.
constexpr double quad_residual_tol = 1e-8;

int wrap(int k, int n) { return ((k % n) + n) % n; }

template <class P>
double dist(const P& a, const P& b) {
  if constexpr (std::is_same_v<P, PlanePoint>) return std::abs(a - b);
  else return norm(a - b);
}

// Circle through the four insertion points.  Uses the best-conditioned three
// (largest pairwise-distance product) and checks the fourth against it; a
// tagged infinite point or collinear quad yields the line variant.
template <class P, class CircleOrLineT, class CircleT, class LineT>
CircleOrLineT circle_through_quad(const EdgePointQuad<P>& q) {
  std::vector<P> finite;
  for (const auto* p : {&q.ab, &q.bc, &q.cd, &q.da})
    if (!p->infinite()) finite.push_back(p->point());

  if (finite.size() < 2)
    throw std::domain_error("degenerate edge points: fewer than two finite points");

  if (finite.size() < 4) {
    // A circle through the point at infinity is a straight line.
    std::size_t fi = 0, fj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < finite.size(); ++i)
      for (std::size_t j = i + 1; j < finite.size(); ++j)
        if (double d = dist(finite[i], finite[j]); d > best) best = d, fi = i, fj = j;
    const P dir = finite[fj] - finite[fi];
    return LineT{finite[fi], dir / dist(finite[fj], finite[fi])};
  }

  double best = -1.0;
  std::array<P, 3> tri{finite[0], finite[1], finite[2]};
  P fourth = finite[3];
  for (int skip = 0; skip < 4; ++skip) {
    std::array<P, 3> t;
    int n = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) t[n++] = finite[i];
    const double score = dist(t[0], t[1]) * dist(t[1], t[2]) * dist(t[2], t[0]);
    if (score > best) {
      best = score;
      tri = t;
      fourth = finite[skip];
    }
  }

  CircleOrLineT k = circumcircle(tri[0], tri[1], tri[2]);
  if (std::holds_alternative<LineT>(k)) return k;
  const CircleT& circle = std::get<CircleT>(k);
  const double residual = std::abs(dist(fourth, circle.center) - circle.radius);
  if (residual > quad_residual_tol * circle.radius)
    throw std::runtime_error("edge points failed the concyclicity consistency check");
  return k;
}

FrenetFrame frame_at(const Circle3& k, const Vec3& point, const Vec3& chord) {
  const Vec3 radial = normalized(point - k.center);
  Vec3 t = normalized(cross(k.normal, radial));
  if (dot(t, chord) < 0.0) t = -t;
  const Vec3 n = -radial;
  return {t, n, cross(t, n)};
}

FrenetFrame frame_at(const Circle2& k, const PlanePoint& point, const PlanePoint& chord) {
  const PlanePoint radial = (point - k.center) / std::abs(point - k.center);
  PlanePoint t = PlanePoint(0.0, 1.0) * radial;
  if (t.real() * chord.real() + t.imag() * chord.imag() < 0.0) t = -t;
  const PlanePoint n = -radial;
  const Vec3 tangent = embed_xy(t);
  const Vec3 normal = embed_xy(n);
  return {tangent, normal, cross(tangent, normal)};
}

std::array<Vec3, 4> stencil3(const DiscreteCurve& curve, int edge) {
  return {curve.vertex(edge - 1), curve.vertex(edge), curve.vertex(edge + 1),
          curve.vertex(edge + 2)};
}

std::array<PlanePoint, 4> stencil2(const DiscreteCurve& curve, int edge) {
  return {curve.vertex2(edge - 1), curve.vertex2(edge), curve.vertex2(edge + 1),
          curve.vertex2(edge + 2)};
}

}  // namespace

// ---------------------------------------------------------------------------
// DiscreteCurve

DiscreteCurve::DiscreteCurve(int dim, bool closed, std::vector<Vec3> vertices)
    : dim_(dim), closed_(closed), vertices_(std::move(vertices)) {
  validate();
}

DiscreteCurve DiscreteCurve::planar(std::vector<PlanePoint> vertices, bool closed) {
  std::vector<Vec3> v;
  v.reserve(vertices.size());
  for (const auto& z : vertices) v.push_back(embed_xy(z));
  return DiscreteCurve(2, closed, std::move(v));
}

DiscreteCurve DiscreteCurve::spatial(std::vector<Vec3> vertices, bool closed) {
  return DiscreteCurve(3, closed, std::move(vertices));
}

void DiscreteCurve::validate() const {
  const int n = vertex_count();
  if (closed_ && n < 4)
    throw std::invalid_argument("closed curve needs at least 4 vertices");
  const int windows = closed_ ? n : n - 3;
  for (int s = 0; s < windows; ++s) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const Vec3 vi = vertices_[wrap(s + i, n)];
        const Vec3 vj = vertices_[wrap(s + j, n)];
        if (vi == vj) {
          std::ostringstream msg;
          msg << "vertices " << wrap(s + i, n) << " and " << wrap(s + j, n)
              << " coincide within a window of four consecutive vertices";
          throw std::invalid_argument(msg.str());
        }
      }
    }
  }
}

int DiscreteCurve::edge_count() const {
  const int n = vertex_count();
  if (closed_) return n;
  return n > 0 ? n - 1 : 0;
}

Vec3 DiscreteCurve::vertex(int k) const {
  const int n = vertex_count();
  if (closed_) return vertices_[wrap(k, n)];
  if (k < 0 || k >= n) throw std::out_of_range("vertex index out of range");
  return vertices_[k];
}

PlanePoint DiscreteCurve::vertex2(int k) const {
  const Vec3 v = vertex(k);
  return {v.x, v.y};
}

bool DiscreteCurve::edge_is_interior(int i) const {
  if (closed_) return i >= 0 && i < edge_count();
  return i >= 1 && i <= vertex_count() - 3;
}

std::vector<int> DiscreteCurve::interior_edges() const {
  std::vector<int> edges;
  for (int i = 0; i < edge_count(); ++i)
    if (edge_is_interior(i)) edges.push_back(i);
  return edges;
}

DiscreteCurve DiscreteCurve::read(std::istream& in) {
  std::string line;
  bool have_header = false;
  bool closed = false;
  int dim = 0;
  std::vector<Vec3> vertices;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (!have_header) {
      if (first == "open") closed = false;
      else if (first == "closed") closed = true;
      else throw std::runtime_error("curve file: expected header 'open' or 'closed'");
      have_header = true;
      continue;
    }
    double x = 0, y = 0, z = 0;
    std::istringstream vs(line);
    if (!(vs >> x >> y)) throw std::runtime_error("curve file: bad vertex at line " +
                                                  std::to_string(lineno));
    const int d = (vs >> z) ? 3 : 2;
    if (dim == 0) dim = d;
    else if (dim != d)
      throw std::runtime_error("curve file: mixed 2D/3D vertices at line " +
                               std::to_string(lineno));
    vertices.push_back({x, y, dim == 2 ? 0.0 : z});
  }
  if (!have_header) throw std::runtime_error("curve file: missing header");
  if (vertices.empty()) throw std::runtime_error("curve file: no vertices");
  return DiscreteCurve(dim, closed, std::move(vertices));
}

DiscreteCurve DiscreteCurve::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file: " + path);
  return read(in);
}

// ---------------------------------------------------------------------------
// Per-edge analysis

EdgeAnalysis analyze_edge(const DiscreteCurve& curve, int edge) {
  if (!curve.edge_is_interior(edge))
    throw std::out_of_range("insufficient neighborhood: edge " + std::to_string(edge) +
                            " has no four-vertex stencil");
  EdgeAnalysis r;
  r.edge = edge;

  if (curve.dimension() == 2) {
    const auto [a, b, c, d] = stencil2(curve, edge);
    const EdgePointQuad<PlanePoint> quad = edge_points(a, b, c, d);
    r.points = {embed_xy(quad.ab), embed_xy(quad.bc), embed_xy(quad.cd), embed_xy(quad.da)};
    const CircleOrLine2 k = circle_through_quad<PlanePoint, CircleOrLine2, Circle2, Line2>(quad);
    r.circle = embed_xy(k);
    if (std::holds_alternative<Circle2>(k)) {
      const Circle2& circle = std::get<Circle2>(k);
      r.kappa = 1.0 / circle.radius;
      if (!quad.bc.infinite()) {
        r.frame = frame_at(circle, quad.bc.point(), c - b);
        r.torsion = 0.0;  // torsion vanishes identically on planar curves
      }
    }
    return r;
  }

  const auto [a, b, c, d] = stencil3(curve, edge);
  const EdgePointQuad<SpacePoint> quad = edge_points(a, b, c, d);
  r.points = quad;
  r.circle = circle_through_quad<SpacePoint, CircleOrLine3, Circle3, Line3>(quad);
  r.osculating_sphere = circumsphere(a, b, c, d);
  if (std::holds_alternative<Circle3>(r.circle)) {
    const Circle3& circle = std::get<Circle3>(r.circle);
    r.kappa = 1.0 / circle.radius;
    if (!quad.bc.infinite()) {
      r.frame = frame_at(circle, quad.bc.point(), c - b);
      const Quaternion cr = cross_ratio(a, b, c, d);
      r.torsion = -9.0 * dot(cr.im, r.frame->normal) / (2.0 * r.kappa * norm2(b - c));
      if (r.osculating_sphere && *r.torsion != 0.0) {
        const double offset =
            dot(r.osculating_sphere->center - circle.center, r.frame->binormal);
        r.kappa_prime = offset * r.kappa * r.kappa * *r.torsion;
      }
    }
  }
  return r;
}

CircleOrLine3 curvature_circle(const DiscreteCurve& curve, int edge) {
  return analyze_edge(curve, edge).circle;
}

double discrete_curvature(const DiscreteCurve& curve, int edge) {
  return analyze_edge(curve, edge).kappa;
}

FrenetFrame frenet_frame(const DiscreteCurve& curve, int edge) {
  const EdgeAnalysis r = analyze_edge(curve, edge);
  if (!r.frame)
    throw std::domain_error("flat frame: curvature circle degenerates to a line");
  return *r.frame;
}

double discrete_torsion(const DiscreteCurve& curve, int edge) {
  const EdgeAnalysis r = analyze_edge(curve, edge);
  if (!r.torsion) throw std::domain_error("torsion undefined on straight segment");
  return *r.torsion;
}

std::optional<Sphere> osculating_sphere(const DiscreteCurve& curve, int edge) {
  return analyze_edge(curve, edge).osculating_sphere;
}

double discrete_kappa_prime(const DiscreteCurve& curve, int edge) {
  const EdgeAnalysis r = analyze_edge(curve, edge);
  if (!r.kappa_prime) throw std::domain_error("kappa' undefined (planar or straight)");
  return *r.kappa_prime;
}

bool is_arclength_edge(const DiscreteCurve& curve, int edge, double tol) {
  const EdgeAnalysis r = analyze_edge(curve, edge);
  if (!std::holds_alternative<Circle3>(r.circle)) return false;
  if (r.points.bc.infinite() || r.points.da.infinite()) return false;
  const Circle3& k = std::get<Circle3>(r.circle);
  const Vec3 gap = r.points.bc.point() + r.points.da.point() - 2.0 * k.center;
  return norm(gap) <= tol * k.radius;
}

}  // namespace crcurve
