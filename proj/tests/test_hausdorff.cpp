#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "equidist/focal.hpp"
#include "equidist/hausdorff.hpp"
#include "test_support.hpp"

using namespace equidist;
namespace et = equidist::testing;

TEST_CASE("directed_hausdorff examples") {
  const CompactSet a = CompactSet::of_point({0.0, 0.0});
  const CompactSet b = CompactSet::of_point({3.0, 4.0});
  CHECK(directed_hausdorff(a, b, 0.01) == doctest::Approx(5.0));

  // unit circle against its inscribed axis-aligned square
  CompactSet circle;
  circle.items.emplace_back(Arc2::full_circle({0.0, 0.0}, 1.0));
  const ConvexPolygon square = et::regular_ngon(4);
  const double pitch = 0.002;
  const double expected = 1.0 - std::sqrt(2.0) / 2.0;
  CHECK(std::abs(directed_hausdorff(circle, square.boundary_set(), pitch) - expected) < pitch);

  // subset gives zero
  CompactSet part;
  part.items.emplace_back(Segment2({-0.5, 0.0}, {0.5, 0.0}));
  CompactSet whole;
  whole.items.emplace_back(Segment2({-1.0, 0.0}, {1.0, 0.0}));
  CHECK(directed_hausdorff(part, whole, 0.01) == doctest::Approx(0.0));

  CHECK_THROWS_AS(directed_hausdorff(CompactSet{}, b, 0.01), EmptySet);
  CHECK_THROWS_AS(directed_hausdorff(a, b, 0.0), BadParameter);
}

TEST_CASE("hausdorff_distance examples") {
  CHECK(hausdorff_distance(CompactSet::of_point({0.0, 0.0}), CompactSet::of_point({3.0, 4.0}),
                           0.01) == doctest::Approx(5.0));

  CompactSet circle;
  circle.items.emplace_back(Arc2::full_circle({0.0, 0.0}, 1.0));
  const double pitch = 0.002;
  const double expected = 1.0 - std::cos(kPi / 16.0);
  CHECK(std::abs(hausdorff_distance(et::regular_ngon(16).boundary_set(), circle, pitch) -
                 expected) < pitch);

  CompactSet self;
  self.items.emplace_back(Segment2({0.0, 0.0}, {1.0, 1.0}));
  CHECK(hausdorff_distance(self, self, 0.01) == doctest::Approx(0.0));
}

TEST_CASE("hausdorff metric axioms on sampled sets") {
  std::mt19937 rng(3);
  const double pitch = 0.02;
  for (int it = 0; it < 40; ++it) {
    const CompactSet a = et::random_compact_set(rng);
    const CompactSet b = et::random_compact_set(rng);
    const CompactSet c = et::random_compact_set(rng);
    const double ab = hausdorff_distance(a, b, pitch);
    const double ba = hausdorff_distance(b, a, pitch);
    CHECK(ab == doctest::Approx(ba));
    CHECK(hausdorff_distance(a, a, pitch) == doctest::Approx(0.0));
    const double ac = hausdorff_distance(a, c, pitch);
    const double cb = hausdorff_distance(c, b, pitch);
    CHECK(ab <= ac + cb + 2.0 * pitch);
  }
}

TEST_CASE("inscribed_ngon examples") {
  const ConvexPolygon square = inscribed_ngon(Circle{1.0}, 4);
  REQUIRE(square.size() == 4);
  CHECK(dist(square.vertex(0), {1.0, 0.0}) < 1e-12);
  CHECK(dist(square.vertex(1), {0.0, 1.0}) < 1e-12);
  CHECK(dist(square.vertex(2), {-1.0, 0.0}) < 1e-12);
  CHECK(dist(square.vertex(3), {0.0, -1.0}) < 1e-12);

  CompactSet circle;
  circle.items.emplace_back(Arc2::full_circle({0.0, 0.0}, 1.0));
  const double pitch = 0.0005;
  const ConvexPolygon p64 = inscribed_ngon(Circle{1.0}, 64);
  const double expected = 1.0 - std::cos(kPi / 64.0);
  CHECK(std::abs(hausdorff_distance(p64.boundary_set(), circle, pitch) - expected) < pitch);

  const ConvexPolygon e8 = inscribed_ngon(EllipseCurve{2.0, 1.0}, 8);
  for (int k = 0; k < 8; ++k) {
    const double t = kTwoPi * k / 8.0;
    CHECK(dist(e8.vertex(static_cast<std::size_t>(k)), {2.0 * std::cos(t), std::sin(t)}) < 1e-12);
  }

  CHECK_THROWS_AS(inscribed_ngon(Circle{1.0}, 2), BadParameter);
}

TEST_CASE("inscribed_ngon on a sampled curve") {
  // dense samples of a circle; uniform arc length picks near-uniform angles
  std::vector<Point2> pts;
  const int m = 720;
  for (int i = 0; i < m; ++i) {
    const double t = kTwoPi * i / static_cast<double>(m);
    pts.push_back({2.0 * std::cos(t), 2.0 * std::sin(t)});
  }
  const SampledCurve curve = make_sampled_curve(std::move(pts), true, 0.05);
  const ConvexPolygon hex = inscribed_ngon(CurveSpec{curve}, 6);
  REQUIRE(hex.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(norm(hex.vertex(i)) == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("make_sampled_curve validation") {
  std::vector<Point2> sparse{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(make_sampled_curve(sparse, true, 0.01), BadParameter);  // gaps exceed pitch
  std::vector<Point2> zigzag{{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.1}, {0.0, 1.0}};
  CHECK_THROWS_AS(make_sampled_curve(zigzag, true, 2.0), BadParameter);  // not convex
}

TEST_CASE("focal_ring_bounds examples") {
  const RingBounds square = focal_ring_bounds(et::unit_square(), {0.0, 0.0});
  CHECK(square.r_min == doctest::Approx(2.0));
  CHECK(square.r_max == doctest::Approx(2.0));

  const RingBounds triangle = focal_ring_bounds(et::triangle_345(), {1.0, 1.0});
  CHECK(triangle.r_min == doctest::Approx(2.0));  // 2r with inradius 1
  CHECK(triangle.r_max == doctest::Approx(2.0));

  const RingBounds off = focal_ring_bounds(et::unit_square(), {0.5, 0.0});
  CHECK(off.r_min == doctest::Approx(1.0));
  CHECK(off.r_max == doctest::Approx(3.0));

  CHECK_THROWS_AS(focal_ring_bounds(et::unit_square(), {2.0, 0.0}), PointNotInterior);
}

TEST_CASE("chebyshev_center finds incircles") {
  const Point2 tri_center = chebyshev_center(et::triangle_345());
  CHECK(dist(tri_center, {1.0, 1.0}) < 1e-8);

  const Point2 hex_center = chebyshev_center(et::regular_ngon(6));
  CHECK(norm(hex_center) < 1e-8);
}

TEST_CASE("exercise1_check examples") {
  const Exercise1Report hex = exercise1_check(et::regular_ngon(6));
  CHECK(hex.is_tangential);
  CHECK(hex.r == doctest::Approx(std::sqrt(3.0) / 2.0));  // apothem = cos(pi/6)
  CHECK(hex.max_radial_error < 1e-9);

  const Exercise1Report tri = exercise1_check(et::triangle_345());
  CHECK(tri.is_tangential);
  CHECK(tri.r == doctest::Approx(1.0));  // area / semiperimeter = 6/6
  CHECK(tri.max_radial_error < 1e-8);

  const ConvexPolygon rect({{0.0, 0.0}, {2.0, 0.0}, {2.0, 1.0}, {0.0, 1.0}});
  CHECK_FALSE(exercise1_check(rect).is_tangential);
}

TEST_CASE("exercise1 focal points on the doubled incircle for tangential polygons") {
  for (int n = 3; n <= 12; ++n) {
    const Exercise1Report report = exercise1_check(et::regular_ngon(n, 1.0, 0.1 * n));
    CHECK(report.is_tangential);
    CHECK(report.r == doctest::Approx(std::cos(kPi / n)));
    CHECK(report.max_radial_error < 1e-8);
  }
  // every triangle is tangential
  std::mt19937 rng(6);
  for (int it = 0; it < 10; ++it) {
    const ConvexPolygon tri = et::random_convex_polygon(rng, 3);
    const Exercise1Report report = exercise1_check(tri);
    CHECK(report.is_tangential);
    CHECK(report.max_radial_error < 1e-8);
  }
}

TEST_CASE("convergence experiment on the unit circle") {
  const std::vector<int> ns{4, 8, 16, 32, 64};
  const double h = 0.02;
  const auto rows = convergence_experiment(Circle{1.0}, {0.0, 0.0}, ns, 3.0, h);
  REQUIRE(rows.size() == ns.size());

  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double expected = 1.0 - std::cos(kPi / ns[i]);
    CHECK(std::abs(rows[i].dh_polygon - expected) < h);  // closed form within pitch
    CHECK(rows[i].dh_polygon < prev);                    // strictly decreasing
    prev = rows[i].dh_polygon;
    CHECK(std::abs(rows[i].dh_midset - rows[i].dh_polygon) < 2.0 * h);
    CHECK(rows[i].dh_focal >= 0.0);
  }
  CHECK(rows.back().dh_focal == doctest::Approx(0.0));  // reference is n_max itself

  // ring containment widened by the polygon-to-curve deviation; the measured
  // deviation itself carries a pitch-bounded sampling error
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ConvexPolygon poly = inscribed_ngon(Circle{1.0}, ns[i]);
    const RingBounds ring = focal_ring_bounds(poly, {0.0, 0.0});
    const double widen = 2.0 * (rows[i].dh_polygon + h);
    CHECK(ring.r_min >= 2.0 - widen);
    CHECK(ring.r_max <= 2.0 + widen);
  }
}

TEST_CASE("convergence experiment rejects bad parameters") {
  CHECK_THROWS_AS(convergence_experiment(Circle{1.0}, {0.0, 0.0}, {2}, 3.0, 0.05), BadParameter);
  CHECK_THROWS_AS(convergence_experiment(Circle{1.0}, {0.0, 0.0}, {}, 3.0, 0.05), BadParameter);
  CHECK_THROWS_AS(convergence_experiment(Circle{2.0}, {0.0, 0.0}, {4, 8}, 1.0, 0.05),
                  BadParameter);  // curve leaves the disk
  CHECK_THROWS_AS(convergence_experiment(Circle{1.0}, {2.0, 0.0}, {4, 8}, 3.0, 0.05),
                  PointNotInterior);
}
