#ifndef EQUIDIST_GEOM_HPP
#define EQUIDIST_GEOM_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace equidist {

// Base tolerance for geometric predicates. Effective tolerances are
// absolute+relative: kEps * (1 + input magnitude).
inline constexpr double kEps = 1e-10;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline double tol_for(double scale) { return kEps * (1.0 + std::abs(scale)); }

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateInput : GeometryError {
  explicit DegenerateInput(const std::string& m) : GeometryError("DegenerateInput: " + m) {}
};
struct EmptySet : GeometryError {
  explicit EmptySet(const std::string& m) : GeometryError("EmptySet: " + m) {}
};
struct PointNotInterior : GeometryError {
  explicit PointNotInterior(const std::string& m) : GeometryError("PointNotInterior: " + m) {}
};
struct DuplicateSites : GeometryError {
  explicit DuplicateSites(const std::string& m) : GeometryError("DuplicateSites: " + m) {}
};
struct BadParameter : GeometryError {
  explicit BadParameter(const std::string& m) : GeometryError("BadParameter: " + m) {}
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2 operator+(Point2 p) const { return {x + p.x, y + p.y}; }
  Point2 operator-(Point2 p) const { return {x - p.x, y - p.y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
  Point2 operator/(double s) const { return {x / s, y / s}; }
  Point2 operator-() const { return {-x, -y}; }
  bool operator==(const Point2&) const = default;
};

inline Point2 operator*(double s, Point2 p) { return p * s; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double sqnorm(Point2 p) { return dot(p, p); }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist(Point2 a, Point2 b) { return norm(b - a); }
// Counterclockwise quarter turn.
inline Point2 perp(Point2 p) { return {-p.y, p.x}; }
inline Point2 lerp(Point2 a, Point2 b, double t) { return a + (b - a) * t; }
inline bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

Point2 normalized(Point2 p);  // throws DegenerateInput on (near-)zero vectors

// Angle in [0, 2*pi).
double normalize_angle(double theta);

enum class Turn { left, right, collinear };

// Sign of (b-a) x (c-a) with absolute+relative collinearity tolerance.
Turn orientation(Point2 a, Point2 b, Point2 c);

// The oriented line { P : dot(n, P) = c } with unit normal n.
class Line2 {
 public:
  Line2(Point2 unit_normal, double offset);
  static Line2 from_normal(Point2 normal, double offset);
  // Line through a and b; the normal is the right-hand perpendicular of b-a,
  // so edges of a counterclockwise polygon get outward normals.
  static Line2 through(Point2 a, Point2 b);

  Point2 normal() const { return n_; }
  double offset() const { return c_; }
  Point2 direction() const { return perp(n_); }
  double signed_distance(Point2 p) const { return dot(n_, p) - c_; }
  Point2 project(Point2 p) const { return p - n_ * signed_distance(p); }
  // Closest point of the line to the origin; anchor for parametrizations.
  Point2 base_point() const { return n_ * c_; }

 private:
  Point2 n_;
  double c_;
};

Point2 reflect_point(Point2 p, const Line2& l);
Line2 perpendicular_bisector(Point2 a, Point2 b);  // throws DegenerateInput if a == b

struct Segment2 {
  Segment2(Point2 a_, Point2 b_);
  Point2 a;
  Point2 b;
  double length() const { return dist(a, b); }
  Point2 point_at(double t) const { return lerp(a, b, t); }
  Point2 midpoint() const { return point_at(0.5); }
};

enum class Rotation { ccw, cw };

// Circular arc. Angles are stored normalized to [0, 2*pi); equal start and
// end angles denote the full circle (extent 2*pi).
class Arc2 {
 public:
  Arc2(Point2 center, double radius, double start_angle, double end_angle, Rotation rot);
  static Arc2 full_circle(Point2 center, double radius);
  // Arc from `from` to `to` on the circle around `center`; both endpoints
  // must lie on a common circle within tolerance.
  static Arc2 between(Point2 center, Point2 from, Point2 to, Rotation rot);

  Point2 center() const { return center_; }
  double radius() const { return radius_; }
  double start_angle() const { return start_; }
  double end_angle() const { return end_; }
  Rotation rotation() const { return rot_; }

  bool is_full_circle() const { return full_; }
  double extent() const;  // in (0, 2*pi]
  double arc_length() const { return radius_ * extent(); }
  bool contains_angle(double theta) const;
  Point2 point_at_angle(double theta) const;
  // t in [0,1] along the rotation direction.
  Point2 point_at_fraction(double t) const;
  Point2 start_point() const { return point_at_angle(start_); }
  Point2 end_point() const { return point_at_angle(end_); }

 private:
  Point2 center_;
  double radius_;
  double start_;
  double end_;
  Rotation rot_;
  bool full_;
};

struct Polyline {
  std::vector<Point2> points;
  bool closed = false;
};

using Primitive = std::variant<Point2, Segment2, Arc2, Polyline>;

// Finite union of primitive shapes supporting exact point-to-set distance.
struct CompactSet {
  std::vector<Primitive> items;

  bool empty() const { return items.empty(); }
  static CompactSet of_points(std::span<const Point2> pts);
  static CompactSet of_point(Point2 p) { return CompactSet{{Primitive{p}}}; }
};

double distance(Point2 x, Point2 p);
double distance(Point2 x, const Segment2& s);
double distance(Point2 x, const Arc2& a);
double distance(Point2 x, const Polyline& pl);
double distance(Point2 x, const Primitive& prim);
double distance_point_set(Point2 x, const CompactSet& s);  // throws EmptySet

// Points spaced at most `pitch` apart along every primitive (endpoints
// included). Deterministic order.
std::vector<Point2> sample_compact_set(const CompactSet& s, double pitch);

// Closed half-plane { P : side * (dot(n,P) - c) >= 0 }.
struct HalfPlane {
  Line2 boundary;
  int side = +1;

  double signed_value(Point2 p) const { return side * boundary.signed_distance(p); }
  bool contains(Point2 p, double tol) const { return signed_value(p) >= -tol; }
  // Half-plane bounded by l that contains `inside` (which must be off the line).
  static HalfPlane containing(const Line2& l, Point2 inside);
};

struct Box2 {
  double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double diagonal() const { return std::hypot(width(), height()); }
  double scale() const;
  bool contains(Point2 p, double tol = 0.0) const;
  Box2 inflated(double d) const { return {xmin - d, ymin - d, xmax + d, ymax + d}; }
  std::vector<Point2> corners() const;  // counterclockwise
  std::vector<HalfPlane> halfplanes() const;
  static Box2 hull(std::span<const Point2> pts);
};

// Convex region produced by half-plane clipping: counterclockwise vertex
// chain, consecutive collinear vertices allowed. Empty vertex list means
// the empty region.
struct ConvexRegion {
  std::vector<Point2> vertices;

  bool empty() const { return vertices.empty(); }
  double area() const;
  bool contains(Point2 p, double tol) const;
};

// Intersection of the half-planes with bbox; empty region when the
// intersection has no area.
ConvexRegion clip_convex_region(std::span<const HalfPlane> halfplanes, const Box2& bbox);

// Portion of the line inside all half-planes and the bbox; nullopt when the
// intersection is empty or a single point.
std::optional<Segment2> clip_line(const Line2& line, std::span<const HalfPlane> halfplanes,
                                  const Box2& bbox);

}  // namespace equidist

#endif
