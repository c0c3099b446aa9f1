#ifndef EQUIDIST_HAUSDORFF_HPP
#define EQUIDIST_HAUSDORFF_HPP

#include <variant>
#include <vector>

#include "equidist/geom.hpp"
#include "equidist/polygon.hpp"

namespace equidist {

// max over samples of a (spaced <= pitch) of the exact distance to b;
// approximates the directed Hausdorff distance within pitch.
double directed_hausdorff(const CompactSet& a, const CompactSet& b, double pitch);
double hausdorff_distance(const CompactSet& a, const CompactSet& b, double pitch);

// Symmetric Hausdorff distance between two finite point clouds.
double cloud_hausdorff(const std::vector<Point2>& a, const std::vector<Point2>& b);

struct Circle {
  double radius = 1.0;
};
struct EllipseCurve {
  double a = 1.0;
  double b = 1.0;
};

// Densely sampled convex closed curve.
struct SampledCurve {
  std::vector<Point2> points;
  bool closed = true;
  double pitch = 0.0;  // declared sampling pitch
};

// Validates the gap and one-sided-turn invariants.
SampledCurve make_sampled_curve(std::vector<Point2> points, bool closed, double pitch);

using CurveSpec = std::variant<Circle, EllipseCurve, SampledCurve>;

// The curve as a distance-queryable set; circles stay exact, other curves
// are sampled at the given pitch.
CompactSet curve_compact_set(const CurveSpec& curve, double pitch);

// Polygon with vertices on the curve at uniform parameter values.
ConvexPolygon inscribed_ngon(const CurveSpec& curve, int n);

struct RingBounds {
  double r_min = 0.0;
  double r_max = 0.0;
};

// Every reflected focal point of (p, o) lies in the closed ring around o
// with these radii: twice the min/max distance from o to the edge lines.
RingBounds focal_ring_bounds(const ConvexPolygon& p, Point2 o);

// Interior point maximizing the distance to the boundary (incenter for
// tangential polygons), found by nested ternary search.
Point2 chebyshev_center(const ConvexPolygon& p);

struct Exercise1Report {
  bool is_tangential = false;
  double r = 0.0;  // inradius (max boundary clearance)
  double max_radial_error = 0.0;
  Point2 incenter;
};

// Checks whether p has an inscribed circle touching every edge and, if so,
// that the reflected focal points all sit on the concentric circle of
// radius 2r around the incenter.
Exercise1Report exercise1_check(const ConvexPolygon& p);

struct ConvergenceRow {
  int n = 0;
  double dh_polygon = 0.0;  // d_H(P_n, C)
  double dh_midset = 0.0;   // d_H(numeric midset of (o, L_n) within D(R), C)
  double dh_focal = 0.0;    // d_H(L_n, L_{n_max})
};

// For each n: inscribe P_n in the curve, build the focal pair around o,
// extract the numeric midset of ({o}, L_n) clipped to the origin-centered
// disk of radius R on a grid of pitch h, and record the Hausdorff columns.
std::vector<ConvergenceRow> convergence_experiment(const CurveSpec& curve, Point2 o,
                                                   const std::vector<int>& n_list, double R,
                                                   double h);

}  // namespace equidist

#endif
