#include "equidist/scene.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "equidist/format.hpp"
#include "json.hpp"

namespace equidist {

namespace {

using nlohmann::json;

Point2 parse_point(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SceneError(what + " must be a [x, y] number pair");
  Point2 p{j[0].get<double>(), j[1].get<double>()};
  if (!finite(p)) throw SceneError(what + " has non-finite coordinates");
  return p;
}

std::vector<Point2> parse_points(const json& j, const std::string& what) {
  if (!j.is_array()) throw SceneError(what + " must be an array of points");
  std::vector<Point2> pts;
  pts.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    pts.push_back(parse_point(j[i], what + "[" + std::to_string(i) + "]"));
  return pts;
}

double parse_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw SceneError(what + " must be a number");
  return j.get<double>();
}

Primitive parse_primitive(const json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw SceneError(what + " must be an object with a \"type\" field");
  const std::string type = j["type"].get<std::string>();
  try {
    if (type == "point") return parse_point(j.at("at"), what + ".at");
    if (type == "segment")
      return Segment2(parse_point(j.at("a"), what + ".a"), parse_point(j.at("b"), what + ".b"));
    if (type == "arc") {
      const Point2 center = parse_point(j.at("center"), what + ".center");
      const double radius = parse_number(j.at("radius"), what + ".radius");
      const double start = j.contains("start") ? parse_number(j["start"], what + ".start") : 0.0;
      const double end = j.contains("end") ? parse_number(j["end"], what + ".end") : 0.0;
      Rotation rot = Rotation::ccw;
      if (j.contains("rotation")) {
        const std::string r = j["rotation"].get<std::string>();
        if (r == "cw")
          rot = Rotation::cw;
        else if (r != "ccw")
          throw SceneError(what + ".rotation must be \"ccw\" or \"cw\"");
      }
      return Arc2(center, radius, start, end, rot);
    }
    if (type == "polyline") {
      Polyline pl;
      pl.points = parse_points(j.at("points"), what + ".points");
      if (pl.points.empty()) throw SceneError(what + ".points must not be empty");
      pl.closed = j.value("closed", false);
      return pl;
    }
  } catch (const json::exception& e) {
    throw SceneError(what + ": " + e.what());
  } catch (const GeometryError& e) {
    throw SceneError(what + ": " + e.what());
  }
  throw SceneError(what + ": unknown primitive type \"" + type + "\"");
}

CompactSet parse_compact_set(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw SceneError(what + " must be a non-empty array");
  CompactSet s;
  s.items.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    s.items.push_back(parse_primitive(j[i], what + "[" + std::to_string(i) + "]"));
  return s;
}

CurveSpec parse_curve(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw SceneError("curve must be an object with a \"type\" field");
  const std::string type = j["type"].get<std::string>();
  if (type == "circle") {
    const double r = parse_number(j.at("radius"), "curve.radius");
    if (!(r > 0.0)) throw SceneError("curve.radius must be positive");
    return Circle{r};
  }
  if (type == "ellipse") {
    const double a = parse_number(j.at("a"), "curve.a");
    const double b = parse_number(j.at("b"), "curve.b");
    if (!(a > 0.0) || !(b > 0.0)) throw SceneError("curve semi-axes must be positive");
    return EllipseCurve{a, b};
  }
  if (type == "sampled") {
    try {
      return make_sampled_curve(parse_points(j.at("points"), "curve.points"),
                                j.value("closed", true),
                                parse_number(j.at("pitch"), "curve.pitch"));
    } catch (const GeometryError& e) {
      throw SceneError(std::string("curve: ") + e.what());
    }
  }
  throw SceneError("unknown curve type \"" + type + "\"");
}

}  // namespace

Scene parse_scene(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw SceneError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SceneError("scene must be a JSON object");
  if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != 1)
    throw SceneError("scene must declare \"version\": 1");

  Scene scene;
  if (j.contains("polygon")) {
    try {
      scene.polygon.emplace(parse_points(j["polygon"], "polygon"));
    } catch (const GeometryError& e) {
      throw SceneError(std::string("polygon: ") + e.what());
    }
  }
  if (j.contains("o")) scene.o = parse_point(j["o"], "o");
  if (j.contains("focal")) {
    const json& f = j["focal"];
    if (!f.is_object()) throw SceneError("focal must be an object");
    if (f.contains("k")) scene.focal_k = parse_compact_set(f["k"], "focal.k");
    if (f.contains("l")) scene.focal_l = parse_compact_set(f["l"], "focal.l");
  }
  if (j.contains("reference")) scene.reference = parse_compact_set(j["reference"], "reference");
  if (j.contains("bbox")) {
    const json& b = j["bbox"];
    if (!b.is_array() || b.size() != 4) throw SceneError("bbox must be [xmin, ymin, xmax, ymax]");
    Box2 box{parse_number(b[0], "bbox[0]"), parse_number(b[1], "bbox[1]"),
             parse_number(b[2], "bbox[2]"), parse_number(b[3], "bbox[3]")};
    if (!(box.width() > 0.0) || !(box.height() > 0.0)) throw SceneError("bbox must have positive extent");
    scene.bbox = box;
  }
  if (j.contains("pitch")) {
    scene.pitch = parse_number(j["pitch"], "pitch");
    if (!(*scene.pitch > 0.0)) throw SceneError("pitch must be positive");
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer()) throw SceneError("samples must be an integer");
    scene.samples = j["samples"].get<int>();
    if (*scene.samples < 2) throw SceneError("samples must be at least 2");
  }
  if (j.contains("eps")) {
    scene.eps = parse_number(j["eps"], "eps");
    if (!(*scene.eps > 0.0)) throw SceneError("eps must be positive");
  }
  if (j.contains("curve")) scene.curve = parse_curve(j["curve"]);
  if (j.contains("threshold")) {
    scene.threshold = parse_number(j["threshold"], "threshold");
    if (!(*scene.threshold > 0.0)) throw SceneError("threshold must be positive");
  }
  if (j.contains("n_list")) {
    const json& nl = j["n_list"];
    if (!nl.is_array() || nl.empty()) throw SceneError("n_list must be a non-empty array");
    std::vector<int> ns;
    for (const json& v : nl) {
      if (!v.is_number_integer()) throw SceneError("n_list entries must be integers");
      ns.push_back(v.get<int>());
    }
    scene.n_list = std::move(ns);
  }
  if (j.contains("radius")) {
    scene.radius = parse_number(j["radius"], "radius");
    if (!(*scene.radius > 0.0)) throw SceneError("radius must be positive");
  }
  if (j.contains("render")) {
    const json& r = j["render"];
    if (!r.is_object()) throw SceneError("render must be an object");
    if (r.contains("layers")) {
      if (!r["layers"].is_array()) throw SceneError("render.layers must be an array of strings");
      for (const json& layer : r["layers"]) {
        if (!layer.is_string()) throw SceneError("render.layers must be an array of strings");
        scene.render.layers.push_back(layer.get<std::string>());
      }
    }
    if (r.contains("stroke_width")) {
      scene.render.stroke_width = parse_number(r["stroke_width"], "render.stroke_width");
      if (!(scene.render.stroke_width > 0.0)) throw SceneError("render.stroke_width must be positive");
    }
    if (r.contains("colors")) {
      if (!r["colors"].is_object()) throw SceneError("render.colors must be an object");
      for (const auto& [key, value] : r["colors"].items()) {
        if (!value.is_string()) throw SceneError("render.colors values must be strings");
        scene.render.colors[key] = value.get<std::string>();
      }
    }
    if (r.contains("canvas")) {
      const json& c = r["canvas"];
      if (!c.is_array() || c.size() != 2) throw SceneError("render.canvas must be [width, height]");
      scene.render.canvas_width = parse_number(c[0], "render.canvas[0]");
      scene.render.canvas_height = parse_number(c[1], "render.canvas[1]");
      if (!(scene.render.canvas_width > 0.0) || !(scene.render.canvas_height > 0.0))
        throw SceneError("render.canvas must be positive");
    }
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SceneError("cannot open scene file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

namespace {

// Hand-rolled emitter: keeps key order and number formatting byte-stable.
void append_points(std::string& out, std::span<const Point2> pts) {
  out += "[";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    out += fmt_point(pts[i]);
  }
  out += "]";
}

}  // namespace

std::string construct_document(const FocalPair& fp, const std::vector<VoronoiCell>& cells,
                               const Box2& bbox, const std::vector<double>& eq1_residuals,
                               double min_pairwise_b, bool invariants_pass) {
  double max_eq1_residual = 0.0;
  for (double r : eq1_residuals) max_eq1_residual = std::max(max_eq1_residual, r);
  std::string out;
  out += "{\n";
  out += "  \"version\": 1,\n";
  out += "  \"o\": " + fmt_point(fp.o) + ",\n";
  out += "  \"b\": ";
  append_points(out, fp.b);
  out += ",\n";
  out += "  \"eq1_residuals\": [";
  for (std::size_t i = 0; i < eq1_residuals.size(); ++i) {
    if (i) out += ", ";
    out += fmt_g12(eq1_residuals[i]);
  }
  out += "],\n";
  out += "  \"max_eq1_residual\": " + fmt_g12(max_eq1_residual) + ",\n";
  out += "  \"min_pairwise_b_distance\": " + fmt_g12(min_pairwise_b) + ",\n";
  out += "  \"bbox\": [" + fmt_g12(bbox.xmin) + ", " + fmt_g12(bbox.ymin) + ", " +
         fmt_g12(bbox.xmax) + ", " + fmt_g12(bbox.ymax) + "],\n";
  out += "  \"cells\": [\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const VoronoiCell& cell = cells[i];
    out += "    {\"site_index\": " + std::to_string(cell.site_index) +
           ", \"site\": " + fmt_point(cell.site) + ",\n";
    out += "     \"halfplanes\": [";
    for (std::size_t k = 0; k < cell.halfplanes.size(); ++k) {
      if (k) out += ", ";
      const HalfPlane& hp = cell.halfplanes[k];
      out += "{\"normal\": " + fmt_point(hp.boundary.normal()) +
             ", \"offset\": " + fmt_g12(hp.boundary.offset()) +
             ", \"side\": " + std::to_string(hp.side) + "}";
    }
    out += "],\n";
    out += "     \"region\": ";
    append_points(out, cell.region.vertices);
    out += "}";
    if (i + 1 < cells.size()) out += ",";
    out += "\n";
  }
  out += "  ],\n";
  out += std::string("  \"invariants_pass\": ") + (invariants_pass ? "true" : "false") + "\n";
  out += "}\n";
  return out;
}

std::string verify_document(const std::string& mode, int samples, double eps,
                            const EquidistanceReport& report) {
  std::string out;
  out += "{\n";
  out += "  \"version\": 1,\n";
  out += "  \"mode\": \"" + mode + "\",\n";
  out += "  \"samples\": " + std::to_string(samples) + ",\n";
  out += "  \"eps\": " + fmt_g12(eps) + ",\n";
  out += "  \"max_gap\": " + fmt_g12(report.max_gap) + ",\n";
  out += "  \"worst_point\": " + fmt_point(report.worst_point) + ",\n";
  out += std::string("  \"pass\": ") + (report.passed ? "true" : "false") + "\n";
  out += "}\n";
  return out;
}

std::string midset_document(const MidsetNumeric& m, const Box2& bbox,
                            std::optional<double> reference_deviation, bool pass) {
  std::string out;
  out += "{\n";
  out += "  \"version\": 1,\n";
  out += "  \"h\": " + fmt_g12(m.resolution) + ",\n";
  out += "  \"bbox\": [" + fmt_g12(bbox.xmin) + ", " + fmt_g12(bbox.ymin) + ", " +
         fmt_g12(bbox.xmax) + ", " + fmt_g12(bbox.ymax) + "],\n";
  out += std::string("  \"degenerate\": ") + (m.degenerate ? "true" : "false") + ",\n";
  if (reference_deviation)
    out += "  \"reference_deviation\": " + fmt_g12(*reference_deviation) + ",\n";
  out += "  \"polylines\": [\n";
  for (std::size_t i = 0; i < m.polylines.size(); ++i) {
    out += "    ";
    append_points(out, m.polylines[i]);
    if (i + 1 < m.polylines.size()) out += ",";
    out += "\n";
  }
  out += "  ],\n";
  out += std::string("  \"pass\": ") + (pass ? "true" : "false") + "\n";
  out += "}\n";
  return out;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "n,dh_polygon,dh_midset,dh_focal\n";
  for (const ConvergenceRow& row : rows) {
    out += std::to_string(row.n) + "," + fmt_g12(row.dh_polygon) + "," + fmt_g12(row.dh_midset) +
           "," + fmt_g12(row.dh_focal) + "\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SceneError("cannot write output file: " + path);
  out << content;
}

}  // namespace equidist
