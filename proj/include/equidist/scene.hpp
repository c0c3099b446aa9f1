#ifndef EQUIDIST_SCENE_HPP
#define EQUIDIST_SCENE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "equidist/focal.hpp"
#include "equidist/geom.hpp"
#include "equidist/hausdorff.hpp"
#include "equidist/midset.hpp"
#include "equidist/polygon.hpp"

namespace equidist {

struct SceneError : std::runtime_error {
  explicit SceneError(const std::string& m) : std::runtime_error("SceneError: " + m) {}
};

struct RenderStyle {
  std::vector<std::string> layers;
  double stroke_width = 0.0;  // world units; 0 = auto
  std::map<std::string, std::string> colors;
  double canvas_width = 0.0;  // pixels; 0 = auto
  double canvas_height = 0.0;
};

// Version-tagged scene document: the polygon and parameters a CLI run works
// on. Optional fields fall back to command-line flags or defaults.
struct Scene {
  std::optional<ConvexPolygon> polygon;
  std::optional<Point2> o;
  std::optional<CompactSet> focal_k;
  std::optional<CompactSet> focal_l;
  std::optional<CompactSet> reference;
  std::optional<Box2> bbox;
  std::optional<double> pitch;
  std::optional<int> samples;
  std::optional<double> eps;
  std::optional<CurveSpec> curve;
  std::optional<double> threshold;
  std::optional<std::vector<int>> n_list;
  std::optional<double> radius;
  RenderStyle render;
};

Scene load_scene(const std::string& path);        // throws SceneError
Scene parse_scene(const std::string& json_text);  // throws SceneError

// Output documents (JSON, "version": 1, 12-significant-digit numbers,
// byte-stable for identical inputs).
std::string construct_document(const FocalPair& fp, const std::vector<VoronoiCell>& cells,
                               const Box2& bbox, const std::vector<double>& eq1_residuals,
                               double min_pairwise_b, bool invariants_pass);
std::string verify_document(const std::string& mode, int samples, double eps,
                            const EquidistanceReport& report);
std::string midset_document(const MidsetNumeric& m, const Box2& bbox,
                            std::optional<double> reference_deviation, bool pass);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

void write_file(const std::string& path, const std::string& content);

}  // namespace equidist

#endif
