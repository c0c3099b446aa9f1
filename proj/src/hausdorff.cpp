#include "equidist/hausdorff.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "equidist/focal.hpp"
#include "equidist/midset.hpp"

namespace equidist {

double directed_hausdorff(const CompactSet& a, const CompactSet& b, double pitch) {
  if (a.empty() || b.empty()) throw EmptySet("Hausdorff distance of an empty set");
  if (!(pitch > 0.0)) throw BadParameter("sampling pitch must be positive");
  double worst = 0.0;
  for (Point2 sample : sample_compact_set(a, pitch))
    worst = std::max(worst, distance_point_set(sample, b));
  return worst;
}

double hausdorff_distance(const CompactSet& a, const CompactSet& b, double pitch) {
  return std::max(directed_hausdorff(a, b, pitch), directed_hausdorff(b, a, pitch));
}

double cloud_hausdorff(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  if (a.empty() || b.empty()) throw EmptySet("Hausdorff distance of an empty point cloud");
  auto directed = [](const std::vector<Point2>& from, const std::vector<Point2>& to) {
    double worst = 0.0;
    for (Point2 p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (Point2 q : to) best = std::min(best, dist(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

SampledCurve make_sampled_curve(std::vector<Point2> points, bool closed, double pitch) {
  if (points.size() < 3) throw BadParameter("sampled curve needs at least 3 points");
  if (!(pitch > 0.0)) throw BadParameter("declared pitch must be positive");
  const std::size_t n = points.size();
  const std::size_t last = closed ? n : n - 1;
  for (std::size_t i = 0; i < last; ++i) {
    if (dist(points[i], points[(i + 1) % n]) >= pitch)
      throw BadParameter("sampled curve gap at index " + std::to_string(i) +
                         " exceeds the declared pitch");
  }
  for (std::size_t i = 0; i + 2 < n + (closed ? 2 : 0); ++i) {
    if (orientation(points[i % n], points[(i + 1) % n], points[(i + 2) % n]) == Turn::right)
      throw BadParameter("sampled curve is not convexly ordered at index " +
                         std::to_string((i + 1) % n));
  }
  return SampledCurve{std::move(points), closed, pitch};
}

namespace {

double ellipse_perimeter(double a, double b) {
  // Ramanujan's approximation; only used to choose sampling counts.
  const double h = (a - b) * (a - b) / ((a + b) * (a + b));
  return kPi * (a + b) * (1.0 + 3.0 * h / (10.0 + std::sqrt(4.0 - 3.0 * h)));
}

Polyline ellipse_polyline(double a, double b, double pitch) {
  const auto k = static_cast<std::size_t>(std::ceil(ellipse_perimeter(a, b) / pitch));
  const std::size_t n = std::max<std::size_t>(k, 16);
  Polyline pl;
  pl.closed = true;
  pl.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    pl.points.push_back({a * std::cos(t), b * std::sin(t)});
  }
  return pl;
}

}  // namespace

CompactSet curve_compact_set(const CurveSpec& curve, double pitch) {
  if (!(pitch > 0.0)) throw BadParameter("curve sampling pitch must be positive");
  CompactSet s;
  if (const auto* c = std::get_if<Circle>(&curve)) {
    if (!(c->radius > 0.0)) throw BadParameter("circle radius must be positive");
    s.items.emplace_back(Arc2::full_circle({0.0, 0.0}, c->radius));
  } else if (const auto* e = std::get_if<EllipseCurve>(&curve)) {
    if (!(e->a > 0.0) || !(e->b > 0.0)) throw BadParameter("ellipse semi-axes must be positive");
    s.items.emplace_back(ellipse_polyline(e->a, e->b, pitch));
  } else {
    const auto& sc = std::get<SampledCurve>(curve);
    s.items.emplace_back(Polyline{sc.points, sc.closed});
  }
  return s;
}

namespace {

ConvexPolygon inscribed_in_sampled(const SampledCurve& curve, int n) {
  const std::size_t m = curve.points.size();
  std::vector<double> cumulative(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    cumulative[i + 1] = cumulative[i] + dist(curve.points[i], curve.points[(i + 1) % m]);
  const double total = cumulative[m];
  if (!(total > 0.0)) throw BadParameter("sampled curve has zero length");

  std::vector<Point2> vertices;
  vertices.reserve(static_cast<std::size_t>(n));
  std::size_t seg = 0;
  for (int k = 0; k < n; ++k) {
    const double target = total * static_cast<double>(k) / static_cast<double>(n);
    while (seg + 1 < m && cumulative[seg + 1] <= target) ++seg;
    const double span = cumulative[seg + 1] - cumulative[seg];
    const double t = span > 0.0 ? (target - cumulative[seg]) / span : 0.0;
    vertices.push_back(lerp(curve.points[seg], curve.points[(seg + 1) % m], t));
  }
  return ConvexPolygon(std::move(vertices));
}

}  // namespace

ConvexPolygon inscribed_ngon(const CurveSpec& curve, int n) {
  if (n < 3) throw BadParameter("inscribed polygon needs n >= 3, got " + std::to_string(n));
  if (const auto* c = std::get_if<Circle>(&curve)) {
    if (!(c->radius > 0.0)) throw BadParameter("circle radius must be positive");
    std::vector<Point2> vertices;
    vertices.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
      vertices.push_back({c->radius * std::cos(t), c->radius * std::sin(t)});
    }
    return ConvexPolygon(std::move(vertices));
  }
  if (const auto* e = std::get_if<EllipseCurve>(&curve)) {
    if (!(e->a > 0.0) || !(e->b > 0.0)) throw BadParameter("ellipse semi-axes must be positive");
    std::vector<Point2> vertices;
    vertices.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
      vertices.push_back({e->a * std::cos(t), e->b * std::sin(t)});
    }
    return ConvexPolygon(std::move(vertices));
  }
  return inscribed_in_sampled(std::get<SampledCurve>(curve), n);
}

RingBounds focal_ring_bounds(const ConvexPolygon& p, Point2 o) {
  const FocalPair fp = construct_focal_pair(p, o);
  RingBounds ring{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = -p.edge_line(i).signed_distance(o);  // o interior, so positive
    ring.r_min = std::min(ring.r_min, 2.0 * d);
    ring.r_max = std::max(ring.r_max, 2.0 * d);
  }
  const double tol = 1e-9 * (1.0 + p.diameter());
  for (const Point2& b : fp.b) {
    const double r = dist(b, o);
    if (r < ring.r_min - tol || r > ring.r_max + tol)
      throw std::logic_error("focal point escaped the supporting-line ring");
  }
  return ring;
}

Point2 chebyshev_center(const ConvexPolygon& p) {
  const Box2 bb = p.bounding_box();
  // interior_clearance is concave, so nested ternary search converges; the
  // partial maximum over y stays concave in x.
  auto max_over_y = [&](double x) {
    double lo = bb.ymin, hi = bb.ymax;
    for (int it = 0; it < 120; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (p.interior_clearance({x, m1}) < p.interior_clearance({x, m2}))
        lo = m1;
      else
        hi = m2;
    }
    const double y = 0.5 * (lo + hi);
    return std::pair<double, double>(y, p.interior_clearance({x, y}));
  };
  double lo = bb.xmin, hi = bb.xmax;
  for (int it = 0; it < 120; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (max_over_y(m1).second < max_over_y(m2).second)
      lo = m1;
    else
      hi = m2;
  }
  const double x = 0.5 * (lo + hi);
  return {x, max_over_y(x).first};
}

Exercise1Report exercise1_check(const ConvexPolygon& p) {
  Exercise1Report report;
  report.incenter = chebyshev_center(p);

  double dmin = std::numeric_limits<double>::infinity();
  double dmax = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = -p.edge_line(i).signed_distance(report.incenter);
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }
  report.r = dmin;
  report.is_tangential = (dmax - dmin) <= 1e-6 * p.diameter();
  if (!report.is_tangential) return report;

  const FocalPair fp = construct_focal_pair(p, report.incenter);
  for (const Point2& b : fp.b)
    report.max_radial_error =
        std::max(report.max_radial_error, std::abs(dist(b, report.incenter) - 2.0 * report.r));
  return report;
}

std::vector<ConvergenceRow> convergence_experiment(const CurveSpec& curve, Point2 o,
                                                   const std::vector<int>& n_list, double R,
                                                   double h) {
  if (n_list.empty()) throw BadParameter("empty n list");
  for (int n : n_list)
    if (n < 3) throw BadParameter("inscribed polygon needs n >= 3, got " + std::to_string(n));
  if (!(R > 0.0)) throw BadParameter("clip radius must be positive");
  if (!(h > 0.0)) throw BadParameter("grid pitch must be positive");

  const double pitch = 0.5 * h;
  const CompactSet curve_set = curve_compact_set(curve, pitch);
  std::vector<Point2> curve_samples = sample_compact_set(curve_set, pitch);
  for (Point2 q : curve_samples) {
    if (norm(q) > R)
      throw BadParameter("curve leaves the clip disk; increase the radius");
  }

  const int n_max = *std::max_element(n_list.begin(), n_list.end());
  {
    const ConvexPolygon probe = inscribed_ngon(curve, n_max);
    if (probe.interior_clearance(o) <= tol_for(probe.diameter()))
      throw PointNotInterior("focal origin is not interior to the curve");
  }
  const FocalPair fp_ref = construct_focal_pair(inscribed_ngon(curve, n_max), o);

  const Box2 bbox{-R, -R, R, R};
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    const ConvexPolygon poly = inscribed_ngon(curve, n);
    const FocalPair fp = construct_focal_pair(poly, o);

    ConvergenceRow row;
    row.n = n;
    row.dh_polygon = hausdorff_distance(poly.boundary_set(), curve_set, pitch);
    row.dh_focal = cloud_hausdorff(fp.b, fp_ref.b);

    const MidsetNumeric contour = extract_midset(GapField{fp.k_set(), fp.l_set()}, bbox, h);
    std::vector<Point2> midset_samples = sample_compact_set(contour.as_compact_set(), pitch);
    std::erase_if(midset_samples, [&](Point2 q) { return norm(q) > R; });
    if (midset_samples.empty()) throw EmptySet("numeric midset missed the clip disk");
    row.dh_midset = cloud_hausdorff(midset_samples, curve_samples);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace equidist
