#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <tuple>

#include "pcd/geom2.hpp"
#include "pcd/rng.hpp"

using namespace pcd;

namespace {

const double kS3 = std::sqrt(3.0);

Triangle2 random_triangle(Stream& rng) {
  for (;;) {
    try {
      return Triangle2({rng.uniform() * 4 - 2, rng.uniform() * 4 - 2}, {rng.uniform() * 4 - 2, rng.uniform() * 4 - 2},
                       {rng.uniform() * 4 - 2, rng.uniform() * 4 - 2});
    } catch (const GeometryError&) {
    }
  }
}

bool near(Point2 a, Point2 b, double tol) { return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol; }

}  // namespace

TEST_CASE("triangle validation and orientation") {
  CHECK_THROWS_AS(Triangle2({0, 0}, {1, 1}, {2, 2}), GeometryError);
  CHECK_THROWS_AS(make_point(NAN, 0), GeometryError);
  CHECK_THROWS_AS(make_point(0, INFINITY), GeometryError);
  const Triangle2 cw({0, 0}, {0, 1}, {1, 0});
  CHECK(signed_area(cw[0], cw[1], cw[2]) > 0);
  CHECK(cw.area() == doctest::Approx(0.5));
  const Triangle2 te = Triangle2::equilateral();
  CHECK(te.area() == doctest::Approx(kS3 / 4));
}

TEST_CASE("barycentric examples") {
  const Triangle2 te = Triangle2::equilateral();
  const Bary3 c = barycentric(te, {0.5, kS3 / 6});
  for (int j = 0; j < 3; ++j) CHECK(c[j] == doctest::Approx(1.0 / 3).epsilon(1e-14));

  Stream rng(derive_key(1, {}));
  for (int t = 0; t < 20; ++t) {
    const Triangle2 tri = random_triangle(rng);
    for (int j = 0; j < 3; ++j) {
      const Bary3 b = barycentric(tri, tri[j]);
      for (int k = 0; k < 3; ++k) CHECK(b[k] == doctest::Approx(j == k ? 1.0 : 0.0).epsilon(1e-12).scale(1));
    }
  }

  // (7/10, sqrt3/10): oracle solves the 2x2 system by Cramer's rule.
  const Point2 p{0.7, kS3 / 10};
  const double det = (1.0 - 0.0) * (kS3 / 2) - (0.5 - 0.0) * 0.0;
  const double b2 = (p.x * (kS3 / 2) - 0.5 * p.y) / det;
  const double b3 = (1.0 * p.y - 0.0 * p.x) / det;
  const Bary3 b = barycentric(te, p);
  CHECK(b[1] == doctest::Approx(b2).epsilon(1e-14));
  CHECK(b[2] == doctest::Approx(b3).epsilon(1e-14));
  CHECK(b[1] == doctest::Approx(0.6));
  CHECK(near(reconstruct(te, b), p, 1e-14));
}

TEST_CASE("barycentric round trip over random triangles") {
  Stream rng(derive_key(2, {}));
  const Triangle2 tri = random_triangle(rng);
  for (int i = 0; i < 1000; ++i) {
    const Point2 p{rng.uniform() * 4 - 2, rng.uniform() * 4 - 2};
    const Bary3 b = barycentric(tri, p);
    CHECK(std::abs(b.sum() - 1.0) <= 1e-12);
    CHECK(near(reconstruct(tri, b), p, 1e-10));
    CHECK(contains(tri, p) == b.inside());
  }
}

TEST_CASE("Bary3::make enforces the unit sum") {
  CHECK_NOTHROW(Bary3::make(0.2, 0.3, 0.5));
  CHECK_THROWS_AS(Bary3::make(0.2, 0.3, 0.6), GeometryError);
  CHECK_THROWS_AS(Bary3::make(NAN, 0.5, 0.5), GeometryError);
}

TEST_CASE("affine maps compose with their inverse") {
  CHECK_THROWS_AS(AffineMap2(1, 2, 2, 4, 0, 0), GeometryError);
  const AffineMap2 m(2, 0.5, -1, 3, 0.25, -4);
  const AffineMap2 id = m.compose(m.inverse());
  Stream rng(derive_key(3, {}));
  for (int i = 0; i < 100; ++i) {
    const Point2 p{rng.uniform() * 10, rng.uniform() * 10};
    CHECK(near(id(p), p, 1e-10));
    CHECK(near(m.inverse()(m(p)), p, 1e-10));
  }
}

TEST_CASE("to_basic_triangle") {
  SUBCASE("equilateral is already basic") {
    const auto red = to_basic_triangle(Triangle2::equilateral());
    CHECK(red.params.c1 == doctest::Approx(0.5));
    CHECK(red.params.c2 == doctest::Approx(kS3 / 2));
  }
  SUBCASE("scaled equilateral") {
    const Triangle2 t({0, 0}, {2, 0}, {1, kS3});
    const auto red = to_basic_triangle(t);
    CHECK(red.params.c1 == doctest::Approx(0.5));
    CHECK(red.params.c2 == doctest::Approx(kS3 / 2));
    CHECK(red.map.determinant() == doctest::Approx(0.25));
    const Triangle2 img = red.map.apply(t);
    CHECK(img.area() == doctest::Approx(kS3 / 4));
  }
  SUBCASE("right triangle: longest edge onto [0,1]") {
    const Triangle2 t({0, 0}, {1, 0}, {0, 1});
    const auto red = to_basic_triangle(t);
    const auto& bp = red.params;
    CHECK(bp.c1 > 0);
    CHECK(bp.c1 <= 0.5 + 1e-12);
    CHECK(bp.c2 > 0);
    CHECK((1 - bp.c1) * (1 - bp.c1) + bp.c2 * bp.c2 <= 1 + 1e-12);
    CHECK(near(red.map(t[red.order[0]]), {0, 0}, 1e-12));
    CHECK(near(red.map(t[red.order[1]]), {1, 0}, 1e-12));
    CHECK(near(red.map(t[red.order[2]]), {bp.c1, bp.c2}, 1e-12));
  }
  SUBCASE("random triangles satisfy the basic constraints") {
    Stream rng(derive_key(4, {}));
    for (int i = 0; i < 500; ++i) {
      const Triangle2 t = random_triangle(rng);
      const auto red = to_basic_triangle(t);
      CHECK(red.params.c1 > 0);
      CHECK(red.params.c1 <= 0.5 + 1e-12);
      CHECK((1 - red.params.c1) * (1 - red.params.c1) + red.params.c2 * red.params.c2 <= 1 + 1e-9);
      CHECK(std::abs(red.map.determinant()) * t.area() == doctest::Approx(red.params.c2 / 2).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(BasicTriangleParams::make(0.7, 0.5), GeometryError);
  CHECK_THROWS_AS(BasicTriangleParams::make(0.25, 1.2), GeometryError);
}

TEST_CASE("phi_e") {
  const AffineMap2 id = phi_e(BasicTriangleParams::equilateral());
  CHECK(near(id({0.3, 0.2}), {0.3, 0.2}, 1e-15));
  const auto bp = BasicTriangleParams::make(0.25, 0.5);
  const AffineMap2 m = phi_e(bp);
  CHECK(near(m({0.25, 0.5}), {0.5, kS3 / 2}, 1e-14));
  CHECK(near(m({0, 0}), {0, 0}, 1e-15));
  CHECK(near(m({1, 0}), {1, 0}, 1e-15));
  Stream rng(derive_key(5, {}));
  const Triangle2 tb = bp.triangle(), te = Triangle2::equilateral();
  for (int i = 0; i < 100; ++i) {
    const Point2 p = sample_uniform_triangle(tb, rng);
    const Bary3 a = barycentric(tb, p), b = barycentric(te, m(p));
    for (int j = 0; j < 3; ++j) CHECK(std::abs(a[j] - b[j]) <= 1e-10);
  }
}

TEST_CASE("convex hull") {
  const std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  CHECK(convex_hull(sq).size() == 4);
  CHECK(polygon_area(convex_hull(sq)) == doctest::Approx(1.0));
  const std::vector<Point2> three{{0, 0}, {2, 0}, {0, 1}};
  CHECK(convex_hull(three).size() == 3);
  const std::vector<Point2> line{{0, 0}, {1, 1}, {2, 2}};
  CHECK_THROWS_AS(convex_hull(line), GeometryError);

  Stream rng(derive_key(6, {}));
  std::vector<Point2> pts(100);
  for (auto& p : pts) p = {rng.uniform(), rng.uniform()};
  const double hull = polygon_area(convex_hull(pts));
  double best = 0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c)
        best = std::max(best, std::abs(signed_area(pts[a], pts[b], pts[c])));
  CHECK(hull >= best);
}

TEST_CASE("uniform triangle sampling") {
  const Triangle2 te = Triangle2::equilateral();
  Stream rng(derive_key(7, {}));
  constexpr int kN = 1'000'000;
  double sx = 0, sy = 0, sxx = 0, syy = 0;
  int big_b1 = 0;
  std::map<std::tuple<int, int, int>, int> cells;
  for (int i = 0; i < kN; ++i) {
    const Point2 p = sample_uniform_triangle(te, rng);
    const Bary3 b = barycentric(te, p);
    REQUIRE(b.inside(1e-12));
    sx += p.x, sy += p.y, sxx += p.x * p.x, syy += p.y * p.y;
    big_b1 += b[0] > 0.5;
    const auto idx = [&](int j) { return std::min(3, static_cast<int>(4 * std::max(0.0, b[j]))); };
    ++cells[{idx(0), idx(1), idx(2)}];
  }
  const double mx = sx / kN, my = sy / kN;
  const double sex = std::sqrt((sxx / kN - mx * mx) / kN), sey = std::sqrt((syy / kN - my * my) / kN);
  CHECK(std::abs(mx - 0.5) <= 3 * sex);
  CHECK(std::abs(my - kS3 / 6) <= 3 * sey);
  const double frac = static_cast<double>(big_b1) / kN;
  CHECK(std::abs(frac - 0.25) <= 3 * std::sqrt(0.25 * 0.75 / kN));

  // 16 congruent sub-triangles; chi-square with 15 df at 0.001 is 37.697.
  CHECK(cells.size() == 16);
  double chi2 = 0;
  for (const auto& [key, count] : cells) {
    const double e = kN / 16.0;
    chi2 += (count - e) * (count - e) / e;
  }
  CHECK(chi2 < 37.697);
}

TEST_CASE("streams are reproducible and path dependent") {
  Stream a(derive_key(9, {1, 2})), b(derive_key(9, {1, 2})), c(derive_key(9, {2, 1}));
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  Stream u(derive_key(10, {}));
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    CHECK(u.uniform_open0() > 0.0);
  }
}
