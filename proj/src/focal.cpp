#include "equidist/focal.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace equidist {

FocalPair construct_focal_pair(const ConvexPolygon& p, Point2 o) {
  if (!finite(o)) throw BadParameter("interior point is not finite");
  const double clearance = p.interior_clearance(o);
  if (clearance <= tol_for(p.diameter()))
    throw PointNotInterior("point (" + std::to_string(o.x) + ", " + std::to_string(o.y) +
                           ") is not strictly interior to the polygon");

  FocalPair fp;
  fp.o = o;
  fp.b.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) fp.b.push_back(reflect_point(o, p.edge_line(i)));

  // Strict convexity guarantees pairwise distinct reflections; guard anyway.
  if (min_pairwise_distance(fp.b) <= 1e-9 * (1.0 + p.diameter()))
    throw DegenerateInput("reflected focal points nearly coincide");
  return fp;
}

std::vector<double> equal_distance_residuals(const ConvexPolygon& p, const FocalPair& fp) {
  const std::size_t n = p.size();
  std::vector<double> residuals;
  residuals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 v = p.vertex(i + 1);
    const double to_o = dist(v, fp.o);
    residuals.push_back(std::max(std::abs(dist(v, fp.b[i]) - to_o),
                                 std::abs(to_o - dist(v, fp.b[(i + 1) % n]))));
  }
  return residuals;
}

double max_equal_distance_residual(const ConvexPolygon& p, const FocalPair& fp) {
  double worst = 0.0;
  for (double r : equal_distance_residuals(p, fp)) worst = std::max(worst, r);
  return worst;
}

double min_pairwise_distance(std::span<const Point2> pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, dist(pts[i], pts[j]));
  return best;
}

std::vector<VoronoiCell> voronoi_cells(std::span<const Point2> sites, const Box2& bbox) {
  const std::size_t n = sites.size();
  if (n < 2) throw BadParameter("Voronoi cells need at least 2 sites");
  double scale = bbox.scale();
  for (const Point2& s : sites) scale = std::max(scale, norm(s));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist(sites[i], sites[j]) <= tol_for(scale))
        throw DuplicateSites("sites " + std::to_string(i) + " and " + std::to_string(j) +
                             " coincide");

  std::vector<VoronoiCell> cells;
  cells.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    VoronoiCell cell;
    cell.site_index = i;
    cell.site = sites[i];
    cell.halfplanes.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      cell.halfplanes.push_back(
          HalfPlane::containing(perpendicular_bisector(sites[i], sites[j]), sites[i]));
    }
    cell.region = clip_convex_region(cell.halfplanes, bbox);
    cells.push_back(std::move(cell));
  }
  return cells;
}

CompactSet MidsetExact::as_compact_set() const {
  CompactSet s;
  s.items.reserve(pieces.size());
  for (const Segment2& piece : pieces) s.items.emplace_back(piece);
  return s;
}

MidsetExact exact_midset(const FocalPair& fp, const Box2& bbox) {
  if (fp.b.size() < 3)
    throw BadParameter("focal pair has " + std::to_string(fp.b.size()) +
                       " reflections; a polygon needs at least 3");
  const std::vector<VoronoiCell> cells = voronoi_cells(fp.b, bbox);

  MidsetExact ms;
  ms.pieces.reserve(fp.b.size());
  for (std::size_t i = 0; i < fp.b.size(); ++i) {
    const Line2 bisector = perpendicular_bisector(fp.o, fp.b[i]);
    auto piece = clip_line(bisector, cells[i].halfplanes, bbox);
    if (!piece)
      throw DegenerateInput("midset piece " + std::to_string(i) + " degenerated to a point");
    ms.pieces.push_back(*piece);
  }
  return ms;
}

ReconstructionReport reconstruct_and_compare(const ConvexPolygon& p, Point2 o) {
  const FocalPair fp = construct_focal_pair(p, o);
  const MidsetExact ms = exact_midset(fp, default_cell_bbox(p));

  ReconstructionReport report;
  report.per_edge_errors.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Segment2 edge = p.edge(i);
    const Segment2& piece = ms.pieces[i];
    const double forward = std::max(dist(piece.a, edge.a), dist(piece.b, edge.b));
    const double reversed = std::max(dist(piece.a, edge.b), dist(piece.b, edge.a));
    const double err = std::min(forward, reversed);
    report.per_edge_errors.push_back(err);
    report.max_endpoint_error = std::max(report.max_endpoint_error, err);
  }
  return report;
}

CompactSet ArcChain::as_compact_set() const {
  CompactSet s;
  s.items.reserve(arcs.size());
  for (const Arc2& arc : arcs) s.items.emplace_back(arc);
  return s;
}

ArcChain connected_focal_set(const ConvexPolygon& p, Point2 o) {
  const FocalPair fp = construct_focal_pair(p, o);
  const std::size_t n = p.size();

  ArcChain chain;
  chain.arcs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 center = p.vertex(i + 1);
    const Point2 from = fp.b[i];
    const Point2 to = fp.b[(i + 1) % n];
    const double a_from = std::atan2(from.y - center.y, from.x - center.x);
    const double a_to = std::atan2(to.y - center.y, to.x - center.x);
    const double a_o = std::atan2(o.y - center.y, o.x - center.x);
    // o lies on the circle; pick the b[i] -> b[i+1] arc that avoids it.
    const double ccw_span = normalize_angle(a_to - a_from);
    const bool o_on_ccw = normalize_angle(a_o - a_from) < ccw_span;
    chain.arcs.push_back(Arc2::between(center, from, to, o_on_ccw ? Rotation::cw : Rotation::ccw));
  }
  return chain;
}

EquidistanceReport verify_equidistance_on_boundary(const ConvexPolygon& p, const CompactSet& k,
                                                   const CompactSet& l, int samples_per_edge,
                                                   double eps) {
  if (samples_per_edge < 2) throw BadParameter("need at least 2 samples per edge");
  EquidistanceReport report;
  report.worst_point = p.vertex(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Segment2 edge = p.edge(i);
    for (int s = 0; s < samples_per_edge; ++s) {
      const double t = static_cast<double>(s) / static_cast<double>(samples_per_edge - 1);
      const Point2 x = edge.point_at(t);
      const double gap = std::abs(distance_point_set(x, k) - distance_point_set(x, l));
      if (gap > report.max_gap) {
        report.max_gap = gap;
        report.worst_point = x;
      }
    }
  }
  report.passed = report.max_gap < eps;
  return report;
}

}  // namespace equidist
