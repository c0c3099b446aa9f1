#include "equidist/midset.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <thread>
#include <unordered_map>

namespace equidist {

double GapField::operator()(Point2 x) const {
  return distance_point_set(x, k) - distance_point_set(x, l);
}

double gap(Point2 x, const GapField& field) { return field(x); }

CompactSet MidsetNumeric::as_compact_set() const {
  CompactSet s;
  for (const auto& chain : polylines) {
    if (chain.size() == 1)
      s.items.emplace_back(chain.front());
    else if (chain.size() > 1)
      s.items.emplace_back(Polyline{chain, false});
  }
  return s;
}

namespace {

int thread_count(std::size_t rows) {
  long cap = 0;
  if (const char* env = std::getenv("EQUIDIST_THREADS")) {
    char* end = nullptr;
    cap = std::strtol(env, &end, 10);
    if (end == env || cap < 0) cap = 0;
  }
  if (cap == 0) cap = static_cast<long>(std::thread::hardware_concurrency());
  cap = std::clamp<long>(cap, 1, 32);
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(cap), rows));
}

// Bisection along the grid edge between a (f >= 0) and b (f < 0).
Point2 refine_crossing(const GapField& field, Point2 a, double fa, Point2 b, double fb,
                       double target) {
  if (std::abs(fa) < target) return a;
  if (std::abs(fb) < target) return b;
  Point2 lo = a, hi = b;
  Point2 mid = lerp(lo, hi, 0.5);
  for (int it = 0; it < 200; ++it) {
    mid = lerp(lo, hi, 0.5);
    const double fm = field(mid);
    if (std::abs(fm) < target) return mid;
    if (fm >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

constexpr std::uint64_t edge_key(bool horizontal, std::uint64_t i, std::uint64_t j) {
  return (horizontal ? 1ULL << 63 : 0ULL) | (i << 28) | j;
}

}  // namespace

MidsetNumeric extract_midset(const GapField& field, const Box2& bbox, double h) {
  if (!(h > 0.0)) throw BadParameter("grid pitch must be positive");
  const double scale = bbox.scale();
  if (bbox.width() <= tol_for(scale) || bbox.height() <= tol_for(scale))
    throw DegenerateInput("extraction bounding box is degenerate");
  if (field.k.empty() || field.l.empty()) throw EmptySet("gap field needs two non-empty sets");

  const auto nx = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(bbox.width() / h)));
  const auto ny = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(bbox.height() / h)));
  const double dx = bbox.width() / static_cast<double>(nx);
  const double dy = bbox.height() / static_cast<double>(ny);
  auto node = [&](std::size_t i, std::size_t j) -> Point2 {
    return {bbox.xmin + static_cast<double>(i) * dx, bbox.ymin + static_cast<double>(j) * dy};
  };

  std::vector<double> values((nx + 1) * (ny + 1));
  {
    const int workers = thread_count(ny + 1);
    auto eval_rows = [&](std::size_t j0, std::size_t j1) {
      for (std::size_t j = j0; j < j1; ++j)
        for (std::size_t i = 0; i <= nx; ++i) values[j * (nx + 1) + i] = field(node(i, j));
    };
    if (workers <= 1) {
      eval_rows(0, ny + 1);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (ny + 1 + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        const std::size_t j0 = static_cast<std::size_t>(w) * chunk;
        const std::size_t j1 = std::min(ny + 1, j0 + chunk);
        if (j0 < j1) pool.emplace_back(eval_rows, j0, j1);
      }
      for (auto& t : pool) t.join();
    }
  }

  MidsetNumeric result;
  result.resolution = h;

  // Thick-midset heuristic: a field that vanishes on most of the grid has
  // overlapping focal sets and no meaningful contour.
  std::size_t zeros = 0;
  for (std::size_t j = 0; j <= ny; ++j)
    for (std::size_t i = 0; i <= nx; ++i) {
      const Point2 p = node(i, j);
      if (std::abs(values[j * (nx + 1) + i]) <= 1e-12 * (1.0 + std::abs(p.x) + std::abs(p.y)))
        ++zeros;
    }
  result.degenerate = 2 * zeros > (nx + 1) * (ny + 1);

  const double target = std::min(1e-9, h * 1e-3);
  std::vector<Point2> verts;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> segments;
  std::unordered_map<std::uint64_t, std::uint32_t> edge_vertex;

  auto crossing_vertex = [&](bool horizontal, std::size_t i, std::size_t j) -> std::uint32_t {
    const std::uint64_t key = edge_key(horizontal, i, j);
    if (auto it = edge_vertex.find(key); it != edge_vertex.end()) return it->second;
    const Point2 pa = node(i, j);
    const Point2 pb = horizontal ? node(i + 1, j) : node(i, j + 1);
    const double fa = values[j * (nx + 1) + i];
    const double fb = horizontal ? values[j * (nx + 1) + i + 1] : values[(j + 1) * (nx + 1) + i];
    const Point2 v = fa >= 0.0 ? refine_crossing(field, pa, fa, pb, fb, target)
                               : refine_crossing(field, pb, fb, pa, fa, target);
    const auto idx = static_cast<std::uint32_t>(verts.size());
    verts.push_back(v);
    edge_vertex.emplace(key, idx);
    return idx;
  };
  auto emit = [&](std::uint32_t a, std::uint32_t b) {
    if (dist(verts[a], verts[b]) <= 1e-15 * (1.0 + scale)) return;
    segments.emplace_back(a, b);
  };

  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const bool s00 = values[j * (nx + 1) + i] >= 0.0;
      const bool s10 = values[j * (nx + 1) + i + 1] >= 0.0;
      const bool s11 = values[(j + 1) * (nx + 1) + i + 1] >= 0.0;
      const bool s01 = values[(j + 1) * (nx + 1) + i] >= 0.0;
      if (s00 == s10 && s10 == s11 && s11 == s01) continue;

      const bool cross_bottom = s00 != s10;
      const bool cross_right = s10 != s11;
      const bool cross_top = s01 != s11;
      const bool cross_left = s00 != s01;

      if (cross_bottom && cross_right && cross_top && cross_left) {
        // Saddle: disambiguate with the sign at the cell center.
        const Point2 center = lerp(node(i, j), node(i + 1, j + 1), 0.5);
        const bool sc = field(center) >= 0.0;
        const std::uint32_t vb = crossing_vertex(true, i, j);
        const std::uint32_t vr = crossing_vertex(false, i + 1, j);
        const std::uint32_t vt = crossing_vertex(true, i, j + 1);
        const std::uint32_t vl = crossing_vertex(false, i, j);
        if (sc == s00) {
          emit(vb, vr);
          emit(vl, vt);
        } else {
          emit(vb, vl);
          emit(vt, vr);
        }
        continue;
      }

      std::uint32_t ends[2];
      int count = 0;
      if (cross_bottom) ends[count++] = crossing_vertex(true, i, j);
      if (cross_right) ends[count++] = crossing_vertex(false, i + 1, j);
      if (cross_top) ends[count++] = crossing_vertex(true, i, j + 1);
      if (cross_left) ends[count++] = crossing_vertex(false, i, j);
      if (count == 2) emit(ends[0], ends[1]);
    }
  }

  // Stitch segments into chains: open paths first (seeded at degree-1
  // vertices), then closed loops, all in deterministic creation order.
  std::vector<std::vector<std::uint32_t>> incident(verts.size());
  for (std::uint32_t s = 0; s < segments.size(); ++s) {
    incident[segments[s].first].push_back(s);
    incident[segments[s].second].push_back(s);
  }
  std::vector<bool> used(segments.size(), false);
  auto walk = [&](std::uint32_t seg, std::uint32_t start_vertex) {
    std::vector<Point2> chain;
    chain.push_back(verts[start_vertex]);
    std::uint32_t vertex = start_vertex;
    std::uint32_t current = seg;
    while (true) {
      used[current] = true;
      vertex = segments[current].first == vertex ? segments[current].second
                                                 : segments[current].first;
      chain.push_back(verts[vertex]);
      std::uint32_t next = current;
      for (std::uint32_t cand : incident[vertex]) {
        if (!used[cand]) {
          next = cand;
          break;
        }
      }
      if (next == current) break;
      current = next;
    }
    result.polylines.push_back(std::move(chain));
  };
  for (std::uint32_t v = 0; v < verts.size(); ++v) {
    if (incident[v].size() == 1 && !used[incident[v].front()]) walk(incident[v].front(), v);
  }
  for (std::uint32_t s = 0; s < segments.size(); ++s) {
    if (!used[s]) walk(s, segments[s].first);
  }
  return result;
}

namespace {

double directed_cloud(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  double worst = 0.0;
  for (Point2 p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (Point2 q : b) best = std::min(best, dist(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double hausdorff_to_reference(const MidsetNumeric& m, const CompactSet& reference) {
  const CompactSet contour = m.as_compact_set();
  if (contour.empty()) throw EmptySet("numeric midset has no contour");
  if (reference.empty()) throw EmptySet("reference set is empty");
  const double pitch = m.resolution > 0.0 ? 0.5 * m.resolution : 0.01;
  const std::vector<Point2> a = sample_compact_set(contour, pitch);
  const std::vector<Point2> b = sample_compact_set(reference, pitch);
  return std::max(directed_cloud(a, b), directed_cloud(b, a));
}

}  // namespace equidist
