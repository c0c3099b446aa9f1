#ifndef EQUIDIST_SVG_HPP
#define EQUIDIST_SVG_HPP

#include <optional>
#include <string>

#include "equidist/focal.hpp"
#include "equidist/midset.hpp"
#include "equidist/polygon.hpp"
#include "equidist/scene.hpp"

namespace equidist {

// Computed artifacts a figure can draw; a layer whose pointer is null is a
// missing-layer error.
struct RenderLayers {
  const ConvexPolygon* polygon = nullptr;
  const FocalPair* focal = nullptr;
  const std::vector<VoronoiCell>* cells = nullptr;
  const MidsetExact* midset = nullptr;
  const ArcChain* arcs = nullptr;
  const MidsetNumeric* contour = nullptr;
};

// Deterministic SVG: y-up world coordinates under an explicit flip
// transform, canvas auto-fitted to the world box with a 5% margin, numbers
// printed with 12 significant digits. Layer names: polygon, focal, voronoi,
// midset, arcs, contour.
std::string render_svg(const RenderLayers& layers, const RenderStyle& style,
                       const Box2& world_box);

}  // namespace equidist

#endif
