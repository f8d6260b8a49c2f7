#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "ocnr/geometry.hpp"
#include "ocnr/numeric.hpp"

using namespace ocnr;

namespace {

constexpr double kPi = std::numbers::pi;

struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
  double next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(s >> 11) * 0x1.0p-53;
  }
};

ConvexPolygon unit_square() {
  return convex_hull({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
}

double cross(const Complex& o, const Complex& a, const Complex& b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

}  // namespace

TEST_CASE("convex hull drops interior points and orients counterclockwise") {
  const ConvexPolygon h = convex_hull(
      {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {0, 0}, {0.5, 0.25}, {-0.3, 0.9}, {1, 1}});
  REQUIRE(h.size() == 4);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Complex& o = h.vertices[i];
    const Complex& a = h.vertices[(i + 1) % h.size()];
    const Complex& b = h.vertices[(i + 2) % h.size()];
    CHECK(cross(o, a, b) > 0.0);
  }

  CHECK(convex_hull({{2, 3}, {2, 3}, {2, 3}}).size() == 1);
  const ConvexPolygon seg = convex_hull({{0, 0}, {1, 1}, {2, 2}, {0.5, 0.5}});
  REQUIRE(seg.size() == 2);
  CHECK(hausdorff_distance(seg, convex_hull({{0, 0}, {2, 2}})) == doctest::Approx(0.0));
}

TEST_CASE("polygon support and exposed points on the unit square") {
  const ConvexPolygon sq = unit_square();
  CHECK(polygon_support(sq, 0.0) == doctest::Approx(1.0));
  CHECK(polygon_support(sq, kPi / 2) == doctest::Approx(1.0));
  CHECK(polygon_support(sq, kPi / 4) == doctest::Approx(std::sqrt(2.0)));
  CHECK(polygon_support(ConvexPolygon{}, 0.3) == -kInf);

  const Complex e = polygon_exposed_point(sq, kPi / 4);
  CHECK(std::abs(e - Complex{1.0, 1.0}) < 1e-12);
}

TEST_CASE("halfplane intersection reproduces boxes and survives degeneracy") {
  const std::vector<double> dirs = {0.0, kPi / 2, kPi, 3 * kPi / 2};
  const ConvexPolygon box = halfplane_intersection(dirs, {1.0, 1.0, 1.0, 1.0});
  CHECK(hausdorff_distance(box, unit_square()) < 1e-9);

  // x <= 1, x >= 1, |y| <= 0: a single point
  const ConvexPolygon pt = halfplane_intersection(dirs, {1.0, 0.0, -1.0, 0.0});
  REQUIRE(!pt.empty());
  CHECK(hausdorff_distance(pt, convex_hull({{1.0, 0.0}})) < 1e-8);

  // a zero-width vertical segment
  const ConvexPolygon seg = halfplane_intersection(dirs, {0.0, 1.0, 0.0, 1.0});
  CHECK(hausdorff_distance(seg, convex_hull({{0.0, 1.0}, {0.0, -1.0}})) < 1e-8);
}

TEST_CASE("distance, projection and containment") {
  const ConvexPolygon sq = unit_square();
  CHECK(distance_to_polygon({2.0, 0.0}, sq) == doctest::Approx(1.0));
  CHECK(std::abs(project_to_polygon({2.0, 0.0}, sq) - Complex{1.0, 0.0}) < 1e-12);
  CHECK(distance_to_polygon({0.3, 0.2}, sq) == 0.0);
  CHECK(std::abs(project_to_polygon({0.3, 0.2}, sq) - Complex{0.3, 0.2}) == 0.0);
  CHECK(distance_to_polygon({2.0, 2.0}, sq) == doctest::Approx(std::sqrt(2.0)));

  CHECK(polygon_contains(sq, {1.0 + 5e-10, 0.0}, 1e-9));
  CHECK(!polygon_contains(sq, {1.1, 0.0}, 1e-9));
  CHECK(polygon_contains(convex_hull({{1, 0}}), {1.0, 0.0}, 1e-12));
}

TEST_CASE("hausdorff distance and diameter") {
  const ConvexPolygon sq = unit_square();
  const ConvexPolygon moved = scale_translate(sq, {1.0, 0.0}, {1.0, 0.0});
  CHECK(hausdorff_distance(sq, moved) == doctest::Approx(1.0));
  CHECK(hausdorff_distance(ConvexPolygon{}, sq) == kInf);
  CHECK(hausdorff_distance(ConvexPolygon{}, ConvexPolygon{}) == 0.0);
  CHECK(polygon_diameter(sq) == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(polygon_diameter(ConvexPolygon{}) == 0.0);
}

TEST_CASE("affine images act on vertices") {
  const ConvexPolygon sq = unit_square();
  const ConvexPolygon rot = scale_translate(sq, {0.0, 0.0}, {0.0, 1.0});  // rotate by pi/2
  CHECK(hausdorff_distance(rot, sq) < 1e-12);  // the square is rotation-invariant
  const ConvexPolygon off = scale_translate(sq, {3.0, -1.0}, {2.0, 0.0});
  CHECK(polygon_support(off, 0.0) == doctest::Approx(5.0));
  CHECK(polygon_support(off, kPi / 2) == doctest::Approx(1.0));
}

TEST_CASE("hull of random clouds dominates its points and rebuilds from supports") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Lcg g(seed);
    std::vector<Complex> pts;
    const std::size_t n = 3 + static_cast<std::size_t>(g.next() * 40);
    const double spread = 0.5 + 4.0 * g.next();
    for (std::size_t i = 0; i < n; ++i)
      pts.push_back({spread * (2 * g.next() - 1), spread * (2 * g.next() - 1)});
    const ConvexPolygon hull = convex_hull(pts);

    for (const Complex& p : pts) {
      CHECK(polygon_contains(hull, p, 1e-9));
      for (int k = 0; k < 8; ++k) {
        const double theta = 2 * kPi * k / 8;
        CHECK(std::cos(theta) * p.real() + std::sin(theta) * p.imag() <=
              polygon_support(hull, theta) + 1e-12);
      }
    }

    // support sampling on a grid, then halfplane reconstruction: the result
    // contains the hull and exceeds it by at most the polygonal sampling
    // bound (an edge of length L whose normal falls midway between adjacent
    // sample directions sticks out by (L/2) tan(pi/grid))
    const std::size_t grid = 64;
    std::vector<double> dirs(grid), bounds(grid);
    for (std::size_t k = 0; k < grid; ++k) {
      dirs[k] = 2 * kPi * static_cast<double>(k) / static_cast<double>(grid);
      bounds[k] = polygon_support(hull, dirs[k]);
    }
    const ConvexPolygon rebuilt = halfplane_intersection(dirs, bounds);
    const double slack =
        0.5 * polygon_diameter(hull) * std::tan(kPi / static_cast<double>(grid)) + 1e-9;
    for (const Complex& v : hull.vertices) CHECK(polygon_contains(rebuilt, v, 1e-9));
    CHECK(hausdorff_distance(rebuilt, hull) <= slack);
  }
}
