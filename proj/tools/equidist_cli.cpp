// Command-line front end: construct focal sets, verify equidistance, extract
// numeric midsets, run convergence experiments, and render SVG figures from
// scene files. Exit codes: 0 verified, 1 verification failed, 2 invalid input.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "equidist/focal.hpp"
#include "equidist/format.hpp"
#include "equidist/geom.hpp"
#include "equidist/hausdorff.hpp"
#include "equidist/midset.hpp"
#include "equidist/polygon.hpp"
#include "equidist/scene.hpp"
#include "equidist/svg.hpp"

namespace eq = equidist;

namespace {

const eq::ConvexPolygon& require_polygon(const eq::Scene& scene) {
  if (!scene.polygon) throw eq::SceneError("this command needs a \"polygon\" in the scene");
  return *scene.polygon;
}

eq::Point2 scene_origin(const eq::Scene& scene, const eq::ConvexPolygon& poly) {
  return scene.o ? *scene.o : poly.centroid();
}

int cmd_construct(const eq::Scene& scene, const std::string& out_path) {
  const eq::ConvexPolygon& poly = require_polygon(scene);
  const eq::Point2 o = scene_origin(scene, poly);
  const eq::FocalPair fp = eq::construct_focal_pair(poly, o);
  const eq::Box2 bbox = scene.bbox ? *scene.bbox : eq::default_cell_bbox(poly);
  const std::vector<eq::VoronoiCell> cells = eq::voronoi_cells(fp.b, bbox);

  const std::vector<double> residuals = eq::equal_distance_residuals(poly, fp);
  const double residual = *std::max_element(residuals.begin(), residuals.end());
  const double min_b = eq::min_pairwise_distance(fp.b);
  bool sites_inside = true;
  const double tol = 1e-9 * (1.0 + bbox.scale());
  for (const eq::VoronoiCell& cell : cells)
    sites_inside = sites_inside && cell.region.contains(cell.site, tol);
  const bool pass = residual < 1e-10 && min_b > 1e-9 && sites_inside;

  std::cout << "n: " << poly.size() << "\n";
  std::cout << "o: " << eq::fmt_point(fp.o) << "\n";
  std::cout << "max_eq1_residual: " << eq::fmt_g12(residual) << "\n";
  std::cout << "min_pairwise_b_distance: " << eq::fmt_g12(min_b) << "\n";
  std::cout << "invariants: " << (pass ? "pass" : "fail") << "\n";

  if (!out_path.empty())
    eq::write_file(out_path, eq::construct_document(fp, cells, bbox, residuals, min_b, pass));
  return pass ? 0 : 1;
}

int cmd_verify(const eq::Scene& scene, const std::string& mode, int samples_flag,
               double eps_flag, const std::string& out_path) {
  if (mode != "points" && mode != "arcs")
    throw eq::SceneError("mode must be \"points\" or \"arcs\"");
  const eq::ConvexPolygon& poly = require_polygon(scene);
  const eq::Point2 o = scene_origin(scene, poly);
  const int samples = samples_flag > 0 ? samples_flag : scene.samples.value_or(200);
  const double eps = eps_flag > 0.0 ? eps_flag : scene.eps.value_or(1e-8);

  const eq::CompactSet k = scene.focal_k ? *scene.focal_k : eq::CompactSet::of_point(o);
  eq::CompactSet l;
  if (scene.focal_l) {
    l = *scene.focal_l;
  } else if (mode == "points") {
    l = eq::construct_focal_pair(poly, o).l_set();
  } else {
    l = eq::connected_focal_set(poly, o).as_compact_set();
  }

  const eq::EquidistanceReport report =
      eq::verify_equidistance_on_boundary(poly, k, l, samples, eps);
  std::cout << "mode: " << mode << "\n";
  std::cout << "samples: " << samples << "\n";
  std::cout << "eps: " << eq::fmt_g12(eps) << "\n";
  std::cout << "max_gap: " << eq::fmt_g12(report.max_gap) << "\n";
  std::cout << "worst_point: " << eq::fmt_point(report.worst_point) << "\n";
  std::cout << "result: " << (report.passed ? "pass" : "fail") << "\n";

  if (!out_path.empty()) eq::write_file(out_path, eq::verify_document(mode, samples, eps, report));
  return report.passed ? 0 : 1;
}

eq::Box2 midset_default_bbox(const eq::Scene& scene, const eq::GapField& field) {
  if (scene.bbox) return *scene.bbox;
  if (scene.polygon) {
    const eq::ConvexPolygon& poly = *scene.polygon;
    return poly.bounding_box().inflated(0.5 * poly.diameter());
  }
  std::vector<eq::Point2> pts = eq::sample_compact_set(field.k, 0.25);
  for (eq::Point2 p : eq::sample_compact_set(field.l, 0.25)) pts.push_back(p);
  const eq::Box2 hull = eq::Box2::hull(pts);
  return hull.inflated(0.5 * (1.0 + hull.diagonal()));
}

int cmd_midset(const eq::Scene& scene, double pitch_flag, const std::string& out_path) {
  eq::GapField field;
  if (scene.focal_k && scene.focal_l) {
    field.k = *scene.focal_k;
    field.l = *scene.focal_l;
  } else {
    const eq::ConvexPolygon& poly = require_polygon(scene);
    const eq::FocalPair fp = eq::construct_focal_pair(poly, scene_origin(scene, poly));
    field.k = fp.k_set();
    field.l = fp.l_set();
  }
  const double h = pitch_flag > 0.0 ? pitch_flag : scene.pitch.value_or(0.02);
  const eq::Box2 bbox = midset_default_bbox(scene, field);

  const eq::MidsetNumeric m = eq::extract_midset(field, bbox, h);

  std::optional<eq::CompactSet> reference;
  if (scene.reference)
    reference = *scene.reference;
  else if (scene.polygon)
    reference = scene.polygon->boundary_set();

  std::optional<double> deviation;
  if (reference && !m.degenerate && !m.polylines.empty())
    deviation = eq::hausdorff_to_reference(m, *reference);

  const bool pass = !m.degenerate && (!deviation || *deviation < 2.0 * h);

  std::cout << "h: " << eq::fmt_g12(h) << "\n";
  std::cout << "polylines: " << m.polylines.size() << "\n";
  if (m.degenerate)
    std::cout << "DegenerateField: the gap vanishes on a region; contour is unreliable\n";
  if (deviation) std::cout << "reference_deviation: " << eq::fmt_g12(*deviation) << "\n";
  std::cout << "result: " << (pass ? "pass" : "fail") << "\n";

  if (!out_path.empty()) eq::write_file(out_path, eq::midset_document(m, bbox, deviation, pass));
  return pass ? 0 : 1;
}

int cmd_converge(const eq::Scene& scene, std::vector<int> n_list, double radius_flag,
                 double pitch_flag, const std::string& out_path) {
  if (!scene.curve) throw eq::SceneError("converge needs a \"curve\" in the scene");
  if (n_list.empty()) n_list = scene.n_list.value_or(std::vector<int>{});
  if (n_list.empty()) throw eq::SceneError("converge needs --n-list or a scene \"n_list\"");
  const double R = radius_flag > 0.0 ? radius_flag : scene.radius.value_or(0.0);
  if (!(R > 0.0)) throw eq::SceneError("converge needs --radius or a scene \"radius\"");
  const double h = pitch_flag > 0.0 ? pitch_flag : scene.pitch.value_or(0.01);
  const double threshold = scene.threshold.value_or(0.02);

  eq::Point2 o{0.0, 0.0};
  if (scene.o) {
    o = *scene.o;
  } else if (const auto* sampled = std::get_if<eq::SampledCurve>(&*scene.curve)) {
    eq::Point2 sum{0.0, 0.0};
    for (eq::Point2 p : sampled->points) sum = sum + p;
    o = sum / static_cast<double>(sampled->points.size());
  }

  const std::vector<eq::ConvergenceRow> rows =
      eq::convergence_experiment(*scene.curve, o, n_list, R, h);

  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    monotone = monotone && rows[i].dh_midset <= rows[i - 1].dh_midset + 2.0 * h;
  const bool pass = monotone && rows.back().dh_midset < threshold;

  const std::string csv = eq::convergence_csv(rows);
  std::cout << csv;
  std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  if (!out_path.empty()) eq::write_file(out_path, csv);
  return pass ? 0 : 1;
}

bool wants(const std::vector<std::string>& layers, const std::string& name) {
  return std::find(layers.begin(), layers.end(), name) != layers.end();
}

int cmd_render(const eq::Scene& scene, double pitch_flag, const std::string& out_path) {
  const std::vector<std::string>& layer_names = scene.render.layers;
  if (layer_names.empty()) throw eq::SceneError("render needs a non-empty render.layers list");
  for (const std::string& name : layer_names) {
    if (name != "polygon" && name != "focal" && name != "voronoi" && name != "midset" &&
        name != "arcs" && name != "contour")
      throw eq::SceneError("unknown render layer \"" + name + "\"");
  }

  std::optional<eq::FocalPair> fp;
  std::optional<eq::ArcChain> arcs;
  std::vector<eq::Point2> hull_points;
  if (scene.polygon) {
    const eq::ConvexPolygon& poly = *scene.polygon;
    const eq::Point2 o = scene_origin(scene, poly);
    fp = eq::construct_focal_pair(poly, o);
    hull_points = poly.vertices();
    hull_points.push_back(fp->o);
    for (eq::Point2 b : fp->b) hull_points.push_back(b);
    if (wants(layer_names, "arcs")) {
      arcs = eq::connected_focal_set(poly, o);
      for (const eq::Arc2& arc : arcs->arcs)
        for (int k = 0; k <= 64; ++k)
          hull_points.push_back(arc.point_at_fraction(static_cast<double>(k) / 64.0));
    }
  }

  eq::Box2 world;
  if (scene.bbox)
    world = *scene.bbox;
  else if (!hull_points.empty())
    world = eq::Box2::hull(hull_points);
  else
    throw eq::SceneError("render needs a polygon or an explicit bbox");

  std::optional<std::vector<eq::VoronoiCell>> cells;
  if (wants(layer_names, "voronoi")) {
    if (!fp) throw eq::SceneError("layer \"voronoi\" needs a polygon in the scene");
    cells = eq::voronoi_cells(fp->b, world);
  }
  std::optional<eq::MidsetExact> midset;
  if (wants(layer_names, "midset")) {
    if (!fp || !scene.polygon) throw eq::SceneError("layer \"midset\" needs a polygon in the scene");
    midset = eq::exact_midset(*fp, eq::default_cell_bbox(*scene.polygon));
  }
  std::optional<eq::MidsetNumeric> contour;
  if (wants(layer_names, "contour")) {
    eq::GapField field;
    if (scene.focal_k && scene.focal_l) {
      field.k = *scene.focal_k;
      field.l = *scene.focal_l;
    } else if (fp) {
      field.k = fp->k_set();
      field.l = fp->l_set();
    } else {
      throw eq::SceneError("layer \"contour\" needs focal sets or a polygon");
    }
    const double h = pitch_flag > 0.0 ? pitch_flag : scene.pitch.value_or(0.02);
    contour = eq::extract_midset(field, world, h);
  }

  eq::RenderLayers layers;
  if (scene.polygon) layers.polygon = &*scene.polygon;
  if (fp) layers.focal = &*fp;
  if (cells) layers.cells = &*cells;
  if (midset) layers.midset = &*midset;
  if (arcs) layers.arcs = &*arcs;
  if (contour) layers.contour = &*contour;

  eq::write_file(out_path, eq::render_svg(layers, scene.render, world));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equidist: convex curves as equidistant sets of focal pairs"};
  app.require_subcommand(1);

  std::string scene_path;
  std::string out_path;
  std::string mode = "points";
  int samples = -1;
  double eps = -1.0;
  double pitch = -1.0;
  double radius = -1.0;
  std::vector<int> n_list;

  CLI::App* construct = app.add_subcommand("construct", "focal pair, cells, and invariants");
  CLI::App* verify = app.add_subcommand("verify", "sampled equidistance check on the boundary");
  CLI::App* midset = app.add_subcommand("midset", "numeric midset extraction");
  CLI::App* converge = app.add_subcommand("converge", "inscribed-polygon convergence table");
  CLI::App* render = app.add_subcommand("render", "SVG figure of the computed scene");

  for (CLI::App* sub : {construct, verify, midset, converge, render})
    sub->add_option("--scene", scene_path, "scene file (JSON)")->required();
  construct->add_option("--out", out_path, "output document path");
  verify->add_option("--out", out_path, "output document path");
  midset->add_option("--out", out_path, "contour document path");
  converge->add_option("--out", out_path, "CSV table path");
  render->add_option("--out", out_path, "SVG path")->required();

  verify->add_option("--mode", mode, "points|arcs");
  verify->add_option("--samples", samples, "samples per edge");
  verify->add_option("--eps", eps, "pass tolerance");
  midset->add_option("--pitch", pitch, "grid pitch h");
  render->add_option("--pitch", pitch, "grid pitch for the contour layer");
  converge->add_option("--pitch", pitch, "grid pitch h");
  converge->add_option("--n-list", n_list, "polygon sizes")->delimiter(',');
  converge->add_option("--radius", radius, "clip disk radius R");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const eq::Scene scene = eq::load_scene(scene_path);
    if (construct->parsed()) return cmd_construct(scene, out_path);
    if (verify->parsed()) return cmd_verify(scene, mode, samples, eps, out_path);
    if (midset->parsed()) return cmd_midset(scene, pitch, out_path);
    if (converge->parsed()) return cmd_converge(scene, n_list, radius, pitch, out_path);
    if (render->parsed()) return cmd_render(scene, pitch, out_path);
  } catch (const eq::SceneError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const eq::GeometryError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
