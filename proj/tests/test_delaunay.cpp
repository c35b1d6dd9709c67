#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pcd/delaunay.hpp"
#include "pcd/predicates.hpp"
#include "pcd/rng.hpp"

using namespace pcd;

namespace {

std::vector<Point2> random_points(std::size_t n, std::uint64_t seed) {
  Stream rng(derive_key(seed, {}));
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = {rng.uniform(), rng.uniform()};
  return pts;
}

// Every triangle is counterclockwise, no anchor is strictly inside any
// circumcircle and neighbor links are symmetric.
void check_structure(const DelaunayTriangulation& dt) {
  const auto& pts = dt.points();
  for (std::size_t c = 0; c < dt.size(); ++c) {
    const auto& v = dt.cells()[c];
    REQUIRE(orient2d(pts[v[0]], pts[v[1]], pts[v[2]]) > 0);
    for (std::size_t q = 0; q < pts.size(); ++q)
      if (q != static_cast<std::size_t>(v[0]) && q != static_cast<std::size_t>(v[1]) && q != static_cast<std::size_t>(v[2]))
        REQUIRE(incircle(pts[v[0]], pts[v[1]], pts[v[2]], pts[q]) <= 0);
    for (int k = 0; k < 3; ++k) {
      const int nb = dt.neighbors()[c][k];
      if (nb < 0) continue;
      bool back = false;
      for (int t = 0; t < 3; ++t) back |= dt.neighbors()[static_cast<std::size_t>(nb)][t] == static_cast<int>(c);
      REQUIRE(back);
    }
  }
  CHECK(dt.is_delaunay());
}

bool inside_hull(const std::vector<Point2>& hull, Point2 p) {
  for (std::size_t i = 0; i < hull.size(); ++i)
    if (orient2d(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("predicates") {
  CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(orient2d({0, 0}, {1, 1}, {2, 2}) == 0);
  // Nearly collinear beyond double resolution of the naive determinant.
  CHECK(orient2d({0.5, 0.5}, {12, 12}, {24, 24}) == 0);
  CHECK(orient2d({0.5, 0.5}, {12, 12}, {24, std::nextafter(24.0, 25.0)}) == 1);
  CHECK(orient2d({0.5, 0.5}, {12, 12}, {std::nextafter(24.0, 25.0), 24}) == -1);
  CHECK(incircle({0, 0}, {1, 0}, {1, 1}, {0, 1}) == 0);
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {0.4, 0.4}) == 1);
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {2, 2}) == -1);
}

TEST_CASE("three points give one cell") {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {0.3, 0.8}};
  const auto dt = delaunay(pts);
  CHECK(dt.size() == 1);
  CHECK(dt.total_area() == doctest::Approx(0.4));
}

TEST_CASE("cocircular square keeps the insertion-order diagonal") {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto dt = delaunay(pts);
  CHECK(dt.size() == 2);
  CHECK(dt.total_area() == doctest::Approx(1.0));
  // With input order the first cell is (0,1,2); the diagonal is 0-2.
  bool diag02 = false;
  for (const auto& c : dt.cells()) {
    int hits = 0;
    for (int v : c) hits += v == 0 || v == 2;
    diag02 |= hits == 2;
  }
  const auto again = delaunay(pts);
  CHECK(again.cells() == dt.cells());
  CHECK(diag02);
}

TEST_CASE("Euler identity and empty circumcircles on random anchors") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto pts = random_points(10 + seed, seed);
    const auto dt = delaunay(pts);
    const auto hull = convex_hull(pts);
    const std::size_t interior = pts.size() - hull.size();
    CHECK(dt.size() == 2 * interior + hull.size() - 2);
    CHECK(std::abs(dt.total_area() - polygon_area(hull)) <= 1e-9 * polygon_area(hull));
    check_structure(dt);
  }
}

TEST_CASE("grid anchors (many cocircular quadruples)") {
  std::vector<Point2> pts;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 5; ++j) pts.push_back({i * 0.2, j * 0.25});
  const auto dt = delaunay(pts);
  CHECK(dt.size() == 2 * 5 * 4);
  CHECK(dt.total_area() == doctest::Approx(1.0));
  check_structure(dt);
}

TEST_CASE("hull pockets are filled") {
  // Points nearly collinear along the bottom edge produce slivers.
  std::vector<Point2> pts{{0, 0}, {1, 0}, {0.5, 1e-9}, {0.25, 1e-10}, {0.75, 2e-10}, {0.5, 0.8}};
  const auto dt = delaunay(pts);
  const auto hull = convex_hull(pts);
  CHECK(std::abs(dt.total_area() - polygon_area(hull)) <= 1e-9 * polygon_area(hull));
  check_structure(dt);
}

TEST_CASE("locate") {
  const auto pts = random_points(25, 99);
  const auto dt = delaunay(pts);
  const auto hull = convex_hull(pts);
  Stream rng(derive_key(100, {}));
  for (int i = 0; i < 500; ++i) {
    const Point2 p{rng.uniform(), rng.uniform()};
    const auto c = dt.locate(p);
    CHECK(c.has_value() == inside_hull(hull, p));
    if (c) CHECK(contains(dt.triangle(*c), p));
  }
}

TEST_CASE("invalid anchor sets") {
  const std::vector<Point2> two{{0, 0}, {1, 1}};
  const std::vector<Point2> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  const std::vector<Point2> dup{{0, 0}, {1, 0}, {0, 1}, {1, 0}};
  CHECK_THROWS_AS(delaunay(two), GeometryError);
  CHECK_THROWS_AS(delaunay(line), GeometryError);
  CHECK_THROWS_AS(delaunay(dup), GeometryError);
}
