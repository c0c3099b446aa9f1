#ifndef EQUIDIST_POLYGON_HPP
#define EQUIDIST_POLYGON_HPP

#include <cstddef>
#include <vector>

#include "equidist/geom.hpp"

namespace equidist {

// Strictly convex polygon with counterclockwise vertices. Construction
// rejects clockwise input, repeated vertices, and consecutive collinear
// vertices; diagnostics name the offending vertex index.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point2> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point2>& vertices() const { return vertices_; }
  Point2 vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Segment2 edge(std::size_t i) const;
  // Supporting line of edge i with outward unit normal.
  Line2 edge_line(std::size_t i) const;

  Point2 centroid() const;  // vertex centroid
  Box2 bounding_box() const { return Box2::hull(vertices_); }
  double diameter() const;  // max pairwise vertex distance
  double perimeter() const;

  bool contains(Point2 p, double tol) const;
  // Min distance from p to the edge segments.
  double boundary_distance(Point2 p) const;
  // Min signed distance inward from the edge lines; positive iff p is
  // strictly interior, and then equal to the distance to the boundary.
  double interior_clearance(Point2 p) const;

  CompactSet boundary_set() const;

 private:
  std::vector<Point2> vertices_;
};

// Default clipping window for Voronoi cells: the polygon's bounding box
// inflated by four times its diameter.
Box2 default_cell_bbox(const ConvexPolygon& p);

}  // namespace equidist

#endif
