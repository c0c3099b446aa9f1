#ifndef EQUIDIST_FOCAL_HPP
#define EQUIDIST_FOCAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "equidist/geom.hpp"
#include "equidist/polygon.hpp"

namespace equidist {

// Focal sets of a convex polygon: a single interior point o and its
// reflections b[i] across the supporting lines of the edges. The polygon
// boundary is the set of points equidistant from {o} and {b[0..n-1]}.
struct FocalPair {
  Point2 o;
  std::vector<Point2> b;

  CompactSet k_set() const { return CompactSet::of_point(o); }
  CompactSet l_set() const { return CompactSet::of_points(b); }
};

// b[i] = reflection of o across the supporting line of edge i.
// Throws PointNotInterior unless o is strictly inside p.
FocalPair construct_focal_pair(const ConvexPolygon& p, Point2 o);

// At each vertex, the two adjacent reflections and o are equidistant from
// the vertex; entry i is the deviation at vertex i+1.
std::vector<double> equal_distance_residuals(const ConvexPolygon& p, const FocalPair& fp);
double max_equal_distance_residual(const ConvexPolygon& p, const FocalPair& fp);

double min_pairwise_distance(std::span<const Point2> pts);

struct VoronoiCell {
  std::size_t site_index = 0;
  Point2 site;
  std::vector<HalfPlane> halfplanes;  // bisector half-planes keeping the site
  ConvexRegion region;                // clipped to the requested bbox
};

// Nearest-site cells realized as half-plane intersections clipped to bbox.
// Throws DuplicateSites when two sites coincide within tolerance.
std::vector<VoronoiCell> voronoi_cells(std::span<const Point2> sites, const Box2& bbox);

// One segment per edge index: the perpendicular bisector of (o, b[i])
// clipped to the cell of b[i].
struct MidsetExact {
  std::vector<Segment2> pieces;

  CompactSet as_compact_set() const;
};

MidsetExact exact_midset(const FocalPair& fp, const Box2& bbox);

struct ReconstructionReport {
  double max_endpoint_error = 0.0;
  std::vector<double> per_edge_errors;
};

// Builds the focal pair for p, reconstructs the midset, and compares each
// reconstructed piece with the original edge, endpoint to endpoint.
ReconstructionReport reconstruct_and_compare(const ConvexPolygon& p, Point2 o);

// Connected focal set: a closed chain of circular arcs, arc i centered at
// vertex i+1 with radius |vertex(i+1) - o|, running from b[i] to b[i+1] on
// the side of the circle away from o.
struct ArcChain {
  std::vector<Arc2> arcs;

  CompactSet as_compact_set() const;
};

ArcChain connected_focal_set(const ConvexPolygon& p, Point2 o);

struct EquidistanceReport {
  double max_gap = 0.0;
  Point2 worst_point;
  bool passed = false;
};

// Samples every edge of p and reports the largest |d(X,k) - d(X,l)|;
// passes iff that maximum stays below eps.
EquidistanceReport verify_equidistance_on_boundary(const ConvexPolygon& p, const CompactSet& k,
                                                   const CompactSet& l, int samples_per_edge,
                                                   double eps);

}  // namespace equidist

#endif
