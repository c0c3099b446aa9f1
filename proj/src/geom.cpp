#include "equidist/geom.hpp"

#include <algorithm>
#include <limits>

namespace equidist {

Point2 normalized(Point2 p) {
  const double n = norm(p);
  if (n <= kEps) throw DegenerateInput("cannot normalize a near-zero vector");
  return p / n;
}

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;  // fmod rounding at the seam
  return t;
}

Turn orientation(Point2 a, Point2 b, Point2 c) {
  const Point2 u = b - a;
  const Point2 v = c - a;
  const double cr = cross(u, v);
  const double tol = kEps * (1.0 + norm(u) * norm(v));
  if (cr > tol) return Turn::left;
  if (cr < -tol) return Turn::right;
  return Turn::collinear;
}

Line2::Line2(Point2 unit_normal, double offset) : n_(unit_normal), c_(offset) {
  if (!finite(n_) || !std::isfinite(c_)) throw DegenerateInput("line with non-finite coefficients");
  if (std::abs(norm(n_) - 1.0) > 1e-12) throw DegenerateInput("line normal is not unit length");
}

Line2 Line2::from_normal(Point2 normal, double offset) {
  const double n = norm(normal);
  if (n <= kEps) throw DegenerateInput("line normal is near zero");
  return Line2(normal / n, offset / n);
}

Line2 Line2::through(Point2 a, Point2 b) {
  const Point2 d = b - a;
  if (norm(d) <= tol_for(std::max(norm(a), norm(b))))
    throw DegenerateInput("line through coincident points");
  const Point2 n = normalized(Point2{d.y, -d.x});
  return Line2(n, dot(n, a));
}

Point2 reflect_point(Point2 p, const Line2& l) { return p - l.normal() * (2.0 * l.signed_distance(p)); }

Line2 perpendicular_bisector(Point2 a, Point2 b) {
  const double scale = std::max(norm(a), norm(b));
  if (dist(a, b) <= tol_for(scale)) throw DegenerateInput("perpendicular bisector of coincident points");
  const Point2 n = normalized(b - a);
  return Line2(n, dot(n, lerp(a, b, 0.5)));
}

Segment2::Segment2(Point2 a_, Point2 b_) : a(a_), b(b_) {
  if (!finite(a) || !finite(b)) throw DegenerateInput("segment with non-finite endpoint");
  if (dist(a, b) <= tol_for(std::max(norm(a), norm(b))))
    throw DegenerateInput("segment with coincident endpoints");
}

Arc2::Arc2(Point2 center, double radius, double start_angle, double end_angle, Rotation rot)
    : center_(center), radius_(radius), rot_(rot) {
  if (!finite(center) || !std::isfinite(radius)) throw DegenerateInput("arc with non-finite fields");
  if (radius <= 0.0) throw DegenerateInput("arc radius must be positive");
  start_ = normalize_angle(start_angle);
  end_ = normalize_angle(end_angle);
  full_ = start_ == end_;
}

Arc2 Arc2::full_circle(Point2 center, double radius) { return Arc2(center, radius, 0.0, 0.0, Rotation::ccw); }

Arc2 Arc2::between(Point2 center, Point2 from, Point2 to, Rotation rot) {
  const double r0 = dist(center, from);
  const double r1 = dist(center, to);
  const double scale = std::max({norm(center), norm(from), norm(to)});
  if (std::abs(r0 - r1) > 1e-9 * (1.0 + scale))
    throw DegenerateInput("arc endpoints not on a common circle");
  const double a0 = std::atan2(from.y - center.y, from.x - center.x);
  const double a1 = std::atan2(to.y - center.y, to.x - center.x);
  return Arc2(center, 0.5 * (r0 + r1), a0, a1, rot);
}

double Arc2::extent() const {
  if (full_) return kTwoPi;
  const double d = rot_ == Rotation::ccw ? end_ - start_ : start_ - end_;
  const double e = normalize_angle(d);
  return e == 0.0 ? kTwoPi : e;
}

bool Arc2::contains_angle(double theta) const {
  if (full_) return true;
  const double t = normalize_angle(theta);
  const double d = rot_ == Rotation::ccw ? t - start_ : start_ - t;
  return normalize_angle(d) <= extent() + 1e-12;
}

Point2 Arc2::point_at_angle(double theta) const {
  return center_ + Point2{std::cos(theta), std::sin(theta)} * radius_;
}

Point2 Arc2::point_at_fraction(double t) const {
  const double sweep = rot_ == Rotation::ccw ? extent() : -extent();
  return point_at_angle(start_ + t * sweep);
}

CompactSet CompactSet::of_points(std::span<const Point2> pts) {
  CompactSet s;
  s.items.reserve(pts.size());
  for (Point2 p : pts) s.items.emplace_back(p);
  return s;
}

double distance(Point2 x, Point2 p) { return dist(x, p); }

double distance(Point2 x, const Segment2& s) {
  const Point2 d = s.b - s.a;
  const double t = std::clamp(dot(x - s.a, d) / sqnorm(d), 0.0, 1.0);
  return dist(x, s.a + d * t);
}

double distance(Point2 x, const Arc2& a) {
  const Point2 v = x - a.center();
  const double r = norm(v);
  if (a.is_full_circle()) return std::abs(r - a.radius());
  if (r <= kEps) return a.radius();  // center is equidistant from the whole arc
  const double theta = std::atan2(v.y, v.x);
  if (a.contains_angle(theta)) return std::abs(r - a.radius());
  return std::min(dist(x, a.start_point()), dist(x, a.end_point()));
}

double distance(Point2 x, const Polyline& pl) {
  if (pl.points.empty()) throw EmptySet("distance to empty polyline");
  if (pl.points.size() == 1) return dist(x, pl.points.front());
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = pl.points.size();
  const std::size_t last = pl.closed ? n : n - 1;
  for (std::size_t i = 0; i < last; ++i) {
    const Point2 a = pl.points[i];
    const Point2 b = pl.points[(i + 1) % n];
    if (dist(a, b) <= tol_for(std::max(norm(a), norm(b))))
      best = std::min(best, dist(x, a));
    else
      best = std::min(best, distance(x, Segment2(a, b)));
  }
  return best;
}

double distance(Point2 x, const Primitive& prim) {
  return std::visit([&](const auto& shape) { return distance(x, shape); }, prim);
}

double distance_point_set(Point2 x, const CompactSet& s) {
  if (s.empty()) throw EmptySet("distance to empty compact set");
  double best = std::numeric_limits<double>::infinity();
  for (const Primitive& prim : s.items) best = std::min(best, distance(x, prim));
  return best;
}

namespace {

void sample_segment(Point2 a, Point2 b, double pitch, std::vector<Point2>& out) {
  const auto k = static_cast<std::size_t>(std::ceil(dist(a, b) / pitch));
  const std::size_t n = std::max<std::size_t>(k, 1);
  for (std::size_t j = 0; j <= n; ++j) out.push_back(lerp(a, b, static_cast<double>(j) / static_cast<double>(n)));
}

}  // namespace

std::vector<Point2> sample_compact_set(const CompactSet& s, double pitch) {
  if (s.empty()) throw EmptySet("cannot sample an empty compact set");
  if (!(pitch > 0.0)) throw BadParameter("sampling pitch must be positive");
  std::vector<Point2> out;
  for (const Primitive& prim : s.items) {
    if (const auto* p = std::get_if<Point2>(&prim)) {
      out.push_back(*p);
    } else if (const auto* seg = std::get_if<Segment2>(&prim)) {
      sample_segment(seg->a, seg->b, pitch, out);
    } else if (const auto* arc = std::get_if<Arc2>(&prim)) {
      const auto k = static_cast<std::size_t>(std::ceil(arc->arc_length() / pitch));
      const std::size_t n = std::max<std::size_t>(k, 2);
      for (std::size_t j = 0; j <= n; ++j)
        out.push_back(arc->point_at_fraction(static_cast<double>(j) / static_cast<double>(n)));
    } else {
      const auto& pl = std::get<Polyline>(prim);
      const std::size_t n = pl.points.size();
      if (n == 1) {
        out.push_back(pl.points.front());
        continue;
      }
      const std::size_t last = pl.closed ? n : n - 1;
      for (std::size_t i = 0; i < last; ++i) sample_segment(pl.points[i], pl.points[(i + 1) % n], pitch, out);
    }
  }
  return out;
}

HalfPlane HalfPlane::containing(const Line2& l, Point2 inside) {
  const double sd = l.signed_distance(inside);
  if (std::abs(sd) <= tol_for(norm(inside)))
    throw DegenerateInput("half-plane anchor point lies on the boundary");
  return HalfPlane{l, sd > 0.0 ? +1 : -1};
}

double Box2::scale() const {
  return std::max({std::abs(xmin), std::abs(ymin), std::abs(xmax), std::abs(ymax)});
}

bool Box2::contains(Point2 p, double tol) const {
  return p.x >= xmin - tol && p.x <= xmax + tol && p.y >= ymin - tol && p.y <= ymax + tol;
}

std::vector<Point2> Box2::corners() const {
  return {{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}};
}

std::vector<HalfPlane> Box2::halfplanes() const {
  return {
      HalfPlane{Line2({1.0, 0.0}, xmin), +1},
      HalfPlane{Line2({1.0, 0.0}, xmax), -1},
      HalfPlane{Line2({0.0, 1.0}, ymin), +1},
      HalfPlane{Line2({0.0, 1.0}, ymax), -1},
  };
}

Box2 Box2::hull(std::span<const Point2> pts) {
  if (pts.empty()) throw EmptySet("bounding box of no points");
  Box2 b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (Point2 p : pts) {
    b.xmin = std::min(b.xmin, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.xmax = std::max(b.xmax, p.x);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

double ConvexRegion::area() const {
  double twice = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(vertices[i], vertices[(i + 1) % n]);
  return 0.5 * twice;
}

bool ConvexRegion::contains(Point2 p, double tol) const {
  const std::size_t n = vertices.size();
  if (n == 0) return false;
  if (n == 1) return dist(p, vertices[0]) <= tol;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices[i];
    const Point2 b = vertices[(i + 1) % n];
    const Point2 d = b - a;
    const double len = norm(d);
    if (len <= kEps) continue;
    // signed distance to edge line, positive inside for CCW chains
    if (cross(d, p - a) / len < -tol) return false;
  }
  return true;
}

namespace {

std::vector<Point2> clip_against(const std::vector<Point2>& poly, const HalfPlane& hp, double tol) {
  std::vector<Point2> out;
  const std::size_t n = poly.size();
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 cur = poly[i];
    const Point2 nxt = poly[(i + 1) % n];
    const double sc = hp.signed_value(cur);
    const double sn = hp.signed_value(nxt);
    const bool in_c = sc >= -tol;
    const bool in_n = sn >= -tol;
    if (in_c) out.push_back(cur);
    if (in_c != in_n) {
      const double t = std::clamp(sc / (sc - sn), 0.0, 1.0);
      out.push_back(lerp(cur, nxt, t));
    }
  }
  return out;
}

std::vector<Point2> dedup_cycle(const std::vector<Point2>& poly, double tol) {
  std::vector<Point2> out;
  out.reserve(poly.size());
  for (const Point2& p : poly) {
    if (out.empty() || dist(out.back(), p) > tol) out.push_back(p);
  }
  while (out.size() > 1 && dist(out.front(), out.back()) <= tol) out.pop_back();
  return out;
}

}  // namespace

ConvexRegion clip_convex_region(std::span<const HalfPlane> halfplanes, const Box2& bbox) {
  const double scale = bbox.scale();
  if (bbox.width() <= tol_for(scale) || bbox.height() <= tol_for(scale))
    throw DegenerateInput("clip bounding box is degenerate");
  const double tol = tol_for(scale);

  std::vector<Point2> poly = bbox.corners();
  for (const HalfPlane& hp : halfplanes) {
    poly = clip_against(poly, hp, tol);
    if (poly.empty()) return {};
  }
  poly = dedup_cycle(poly, tol);
  if (poly.size() < 3) return {};
  ConvexRegion region{std::move(poly)};
  if (region.area() <= 1e-12 * (1.0 + scale * scale)) return {};
  return region;
}

std::optional<Segment2> clip_line(const Line2& line, std::span<const HalfPlane> halfplanes,
                                  const Box2& bbox) {
  const double scale = std::max(bbox.scale(), std::abs(line.offset()));
  const double tol = tol_for(scale);
  const Point2 p0 = line.base_point();
  const Point2 dir = line.direction();

  double tmin = -std::numeric_limits<double>::infinity();
  double tmax = std::numeric_limits<double>::infinity();
  auto apply = [&](const HalfPlane& hp) {
    const double alpha = hp.signed_value(p0);
    const double beta = hp.side * dot(hp.boundary.normal(), dir);
    if (std::abs(beta) <= kEps) {
      if (alpha < -tol) tmin = std::numeric_limits<double>::infinity();  // fully outside
      return;
    }
    const double t = -alpha / beta;
    if (beta > 0.0)
      tmin = std::max(tmin, t);
    else
      tmax = std::min(tmax, t);
  };
  for (const HalfPlane& hp : bbox.halfplanes()) apply(hp);
  for (const HalfPlane& hp : halfplanes) apply(hp);

  if (!(tmax - tmin > tol)) return std::nullopt;
  return Segment2(p0 + dir * tmin, p0 + dir * tmax);
}

}  // namespace equidist
