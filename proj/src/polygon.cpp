#include "equidist/polygon.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace equidist {

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw DegenerateInput("polygon needs at least 3 vertices, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!finite(vertices_[i]))
      throw DegenerateInput("polygon vertex " + std::to_string(i) + " is not finite");
  }
  double scale = 0.0;
  for (const Point2& v : vertices_) scale = std::max(scale, std::max(std::abs(v.x), std::abs(v.y)));
  for (std::size_t i = 0; i < n; ++i) {
    if (dist(vertices_[i], vertices_[(i + 1) % n]) <= tol_for(scale))
      throw DegenerateInput("polygon vertex " + std::to_string((i + 1) % n) + " repeats vertex " +
                            std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[(i + 1) % n];
    const Point2 c = vertices_[(i + 2) % n];
    if (orientation(a, b, c) != Turn::left)
      throw DegenerateInput("polygon is not strictly convex counterclockwise at vertex " +
                            std::to_string((i + 1) % n));
  }
}

Segment2 ConvexPolygon::edge(std::size_t i) const {
  return Segment2(vertex(i), vertex(i + 1));
}

Line2 ConvexPolygon::edge_line(std::size_t i) const {
  return Line2::through(vertex(i), vertex(i + 1));
}

Point2 ConvexPolygon::centroid() const {
  Point2 c{0.0, 0.0};
  for (const Point2& v : vertices_) c = c + v;
  return c / static_cast<double>(vertices_.size());
}

double ConvexPolygon::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      best = std::max(best, dist(vertices_[i], vertices_[j]));
  return best;
}

double ConvexPolygon::perimeter() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) sum += edge(i).length();
  return sum;
}

bool ConvexPolygon::contains(Point2 p, double tol) const {
  return interior_clearance(p) >= -tol;
}

double ConvexPolygon::boundary_distance(Point2 p) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices_.size(); ++i) best = std::min(best, distance(p, edge(i)));
  return best;
}

double ConvexPolygon::interior_clearance(Point2 p) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    best = std::min(best, -edge_line(i).signed_distance(p));
  return best;
}

CompactSet ConvexPolygon::boundary_set() const {
  CompactSet s;
  s.items.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) s.items.emplace_back(edge(i));
  return s;
}

Box2 default_cell_bbox(const ConvexPolygon& p) {
  return p.bounding_box().inflated(4.0 * p.diameter());
}

}  // namespace equidist
