#include "equidist/svg.hpp"

#include <cmath>

#include "equidist/format.hpp"

namespace equidist {

namespace {

const char* default_color(const std::string& key) {
  if (key == "polygon") return "#1a1a1a";
  if (key == "focal_o") return "#d62728";
  if (key == "focal_b") return "#1f77b4";
  if (key == "voronoi") return "#9a9a9a";
  if (key == "midset") return "#e377c2";
  if (key == "arcs") return "#2ca02c";
  if (key == "contour") return "#ff7f0e";
  return "#000000";
}

std::string xy(Point2 p) { return fmt_g12(p.x) + " " + fmt_g12(p.y); }

std::string path_element(const std::string& d, const std::string& color, double width,
                         bool closed) {
  std::string out = "<path d=\"" + d;
  if (closed) out += " Z";
  out += "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + fmt_g12(width) +
         "\" stroke-linejoin=\"round\" stroke-linecap=\"round\"/>\n";
  return out;
}

std::string chain_path(std::span<const Point2> pts) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += (i == 0 ? "M " : " L ");
    d += xy(pts[i]);
  }
  return d;
}

std::string circle_element(Point2 center, double r, const std::string& color) {
  return "<circle cx=\"" + fmt_g12(center.x) + "\" cy=\"" + fmt_g12(center.y) + "\" r=\"" +
         fmt_g12(r) + "\" fill=\"" + color + "\"/>\n";
}

std::string arc_path(const Arc2& arc) {
  // SVG arc sweep=1 advances the angle parameter, which is counterclockwise
  // in these raw coordinates; the outer y-flip only affects display.
  if (arc.is_full_circle()) {
    const Point2 a = arc.point_at_angle(0.0);
    const Point2 b = arc.point_at_angle(kPi);
    const std::string r = fmt_g12(arc.radius());
    return "M " + xy(a) + " A " + r + " " + r + " 0 1 1 " + xy(b) + " A " + r + " " + r +
           " 0 1 1 " + xy(a);
  }
  const int sweep = arc.rotation() == Rotation::ccw ? 1 : 0;
  const int large = arc.extent() > kPi ? 1 : 0;
  const std::string r = fmt_g12(arc.radius());
  return "M " + xy(arc.start_point()) + " A " + r + " " + r + " 0 " + std::to_string(large) +
         " " + std::to_string(sweep) + " " + xy(arc.end_point());
}

}  // namespace

std::string render_svg(const RenderLayers& layers, const RenderStyle& style,
                       const Box2& world_box) {
  if (style.layers.empty()) throw BadParameter("render needs a non-empty layer list");

  const double margin = 0.05 * world_box.diagonal();
  const Box2 view = world_box.inflated(margin);

  double canvas_w = style.canvas_width;
  double canvas_h = style.canvas_height;
  if (canvas_w <= 0.0 || canvas_h <= 0.0) {
    canvas_w = 800.0;
    canvas_h = std::round(800.0 * view.height() / view.width());
  }
  const double s = std::min(canvas_w / view.width(), canvas_h / view.height());
  const double tx = 0.5 * canvas_w - s * 0.5 * (view.xmin + view.xmax);
  const double ty = 0.5 * canvas_h + s * 0.5 * (view.ymin + view.ymax);

  const double width = style.stroke_width > 0.0 ? style.stroke_width
                                                : 0.004 * world_box.diagonal();
  auto color = [&](const std::string& key) -> std::string {
    if (auto it = style.colors.find(key); it != style.colors.end()) return it->second;
    return default_color(key);
  };

  std::string body;
  for (const std::string& layer : style.layers) {
    if (layer == "polygon") {
      if (!layers.polygon) throw BadParameter("layer \"polygon\" has no computed polygon");
      body += path_element(chain_path(layers.polygon->vertices()), color("polygon"), width, true);
    } else if (layer == "focal") {
      if (!layers.focal) throw BadParameter("layer \"focal\" has no computed focal pair");
      body += circle_element(layers.focal->o, 2.5 * width, color("focal_o"));
      for (const Point2& b : layers.focal->b) body += circle_element(b, 2.5 * width, color("focal_b"));
    } else if (layer == "voronoi") {
      if (!layers.cells) throw BadParameter("layer \"voronoi\" has no computed cells");
      for (const VoronoiCell& cell : *layers.cells) {
        if (cell.region.empty()) continue;
        body += path_element(chain_path(cell.region.vertices), color("voronoi"), width, true);
      }
    } else if (layer == "midset") {
      if (!layers.midset) throw BadParameter("layer \"midset\" has no computed midset");
      for (const Segment2& piece : layers.midset->pieces)
        body += path_element("M " + xy(piece.a) + " L " + xy(piece.b), color("midset"), width, false);
    } else if (layer == "arcs") {
      if (!layers.arcs) throw BadParameter("layer \"arcs\" has no computed arc chain");
      for (const Arc2& arc : layers.arcs->arcs)
        body += path_element(arc_path(arc), color("arcs"), width, false);
    } else if (layer == "contour") {
      if (!layers.contour) throw BadParameter("layer \"contour\" has no computed contour");
      for (const auto& chain : layers.contour->polylines) {
        if (chain.size() < 2) continue;
        body += path_element(chain_path(chain), color("contour"), width, false);
      }
    } else {
      throw BadParameter("unknown render layer \"" + layer + "\"");
    }
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_g12(canvas_w) +
         "\" height=\"" + fmt_g12(canvas_h) + "\" viewBox=\"0 0 " + fmt_g12(canvas_w) + " " +
         fmt_g12(canvas_h) + "\">\n";
  out += "<g transform=\"matrix(" + fmt_g12(s) + " 0 0 " + fmt_g12(-s) + " " + fmt_g12(tx) +
         " " + fmt_g12(ty) + ")\">\n";
  out += body;
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace equidist
