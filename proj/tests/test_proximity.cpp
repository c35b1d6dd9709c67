#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pcd/proximity.hpp"
#include "pcd/rng.hpp"

using namespace pcd;

namespace {

const double kS3 = std::sqrt(3.0);

ProximityParams params(double r, Bary3 m = Bary3::centroid()) { return ProximityParams::make(Factor::finite(r), m); }

Bary3 random_interior_m(Stream& rng) {
  for (;;) {
    const Bary3 b = sample_uniform_bary(rng);
    if (b[0] > 0.02 && b[1] > 0.02 && b[2] > 0.02) return b;
  }
}

}  // namespace

TEST_CASE("factor and params validation") {
  CHECK_THROWS_AS(Factor::finite(0.9), std::invalid_argument);
  CHECK_THROWS_AS(Factor::finite(NAN), std::invalid_argument);
  CHECK(Factor::infinity().is_infinite());
  CHECK(Factor::exact(Rational(4, 3)).str() == "4/3");
  CHECK(Factor::exact(Rational(4, 3)).value() == doctest::Approx(4.0 / 3));
  CHECK_THROWS_AS(ProximityParams::make(Factor::finite(2), Bary3::vertex(0)), std::invalid_argument);
  CHECK_THROWS_AS(ProximityParams::make(Factor::finite(2), Bary3{{0.5, 0.5, 0.0}}), std::invalid_argument);
}

TEST_CASE("vertex regions") {
  const Bary3 c = Bary3::centroid();
  CHECK(vertex_region_of(c, Bary3{{0.8, 0.1, 0.1}}) == 0);
  CHECK(vertex_region_of(c, c) == 0);
  // b3/m3 = 1.25 beats b1/m1 = 0.9 and b2/m2 = 1.0.
  CHECK(vertex_region_of(Bary3{{0.5, 0.3, 0.2}}, Bary3{{0.45, 0.30, 0.25}}) == 2);
  // Ties between regions 2 and 3 go to the smaller index.
  CHECK(vertex_region_of(c, Bary3{{0.2, 0.4, 0.4}}) == 1);
}

TEST_CASE("arc predicate examples") {
  Stream rng(derive_key(11, {}));
  for (int i = 0; i < 100; ++i) {
    const Bary3 x = sample_uniform_bary(rng);
    CHECK(arc_predicate(params(1.0), x, x));
  }
  // r = 1, x with b_1 = 0.5 in region 1.
  const Bary3 x{{0.5, 0.3, 0.2}};
  CHECK(arc_predicate(params(1.0), x, Bary3::vertex(0)));
  CHECK_FALSE(arc_predicate(params(1.0), x, Bary3{{0.0, 0.5, 0.5}}));
  // r = 2: a medial-triangle point covers the whole triangle.
  const Bary3 med{{0.5, 0.25, 0.25}};
  for (int j = 0; j < 3; ++j) CHECK(arc_predicate(params(2.0), med, Bary3::vertex(j)));
  CHECK(arc_predicate(params(2.0), med, Bary3{{0.0, 0.5, 0.5}}));
  const auto inf = ProximityParams::make(Factor::infinity(), Bary3::centroid());
  CHECK(arc_predicate(inf, Bary3::vertex(0), Bary3::vertex(1)));
}

TEST_CASE("superset region") {
  CHECK(superset_contains(params(2.0), Bary3::centroid()));
  Stream rng(derive_key(12, {}));
  for (int i = 0; i < 100; ++i) CHECK_FALSE(superset_contains(params(1.0), sample_uniform_bary(rng)));
  CHECK(superset_contains(params(1.5), Bary3::centroid()));
  CHECK_FALSE(superset_contains(params(1.5), Bary3{{0.34, 0.33, 0.33}}));
}

TEST_CASE("T_r vertices") {
  const auto eq = BasicTriangleParams::equilateral();
  SUBCASE("r = 3/2 collapses to the centroid") {
    const TrTriangle t = tr_triangle(1.5, eq);
    REQUIRE_FALSE(t.empty);
    for (const auto& p : t.t) {
      CHECK(std::abs(p.x - 0.5) <= 1e-12);
      CHECK(std::abs(p.y - kS3 / 6) <= 1e-12);
    }
  }
  SUBCASE("r = 5/4") {
    const TrTriangle t = tr_triangle(1.25, eq);
    CHECK(t.t[0].x == doctest::Approx(0.3));
    CHECK(t.t[0].y == doctest::Approx(kS3 / 10));
    CHECK(t.t[1].x == doctest::Approx(0.7));
    CHECK(t.t[1].y == doctest::Approx(kS3 / 10));
    // Oracle: intersect y = c2(1 - r x)/(r(1 - c1)) with y = c2(r(x - 1) + 1)/(r c1).
    const double r = 1.25, c1 = eq.c1, c2 = eq.c2;
    const double x3 = (c1 / (1 - c1) + r - 1) / (r * (c1 / (1 - c1)) + r);
    const double y3 = c2 * (1 - r * x3) / (r * (1 - c1));
    CHECK(t.t[2].x == doctest::Approx(x3));
    CHECK(t.t[2].y == doctest::Approx(y3));
    CHECK(t.t[2].x == doctest::Approx(0.5));
    CHECK(t.t[2].y == doctest::Approx(3 * kS3 / 10));
  }
  SUBCASE("empty beyond 3/2") { CHECK(tr_triangle(1.6, eq).empty); }
  SUBCASE("vertices satisfy two constraints with equality and lie in the triangle") {
    Stream rng(derive_key(13, {}));
    for (int i = 0; i < 200; ++i) {
      const double c1 = 0.05 + 0.45 * rng.uniform();
      const double c2max = std::sqrt(1 - (1 - c1) * (1 - c1));
      const auto bp = BasicTriangleParams::make(c1, 0.05 + (c2max - 0.05) * rng.uniform());
      const double r = 1.0 + 0.49 * rng.uniform() + 0.001;
      const TrTriangle t = tr_triangle(r, bp);
      for (int j = 0; j < 3; ++j) {
        const Point2 p = t.t[static_cast<std::size_t>(j)];
        const double g[3] = {bp.c2 * (1 - r * p.x) / (r * (1 - bp.c1)) - p.y,
                             bp.c2 * (r * (p.x - 1) + 1) / (r * bp.c1) - p.y, p.y - bp.c2 * (r - 1) / r};
        int tight = 0;
        for (double s : g) {
          CHECK(s >= -1e-12);
          tight += std::abs(s) <= 1e-12;
        }
        CHECK(tight == 2);
        CHECK(contains(bp.triangle(), p));
        const Bary3 expected = tr_vertex(r, j);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(t.bary[static_cast<std::size_t>(j)][k] - expected[k]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("classify_M") {
  const auto eq = BasicTriangleParams::equilateral();
  const Triangle2 te = Triangle2::equilateral();
  CHECK(classify_M(2.0, Bary3::centroid()) == MPlacement::OutsideTr);
  CHECK(classify_M(1.25, barycentric(te, {0.6, kS3 / 10})) == MPlacement::BoundaryNonVertex);
  CHECK(classify_M(1.25, barycentric(te, {0.7, kS3 / 10})) == MPlacement::VertexOfTr);
  CHECK(classify_M(1.25, Point2{0.6, kS3 / 10}, eq) == MPlacement::BoundaryNonVertex);
  CHECK(classify_M(1.25, Point2{0.7, kS3 / 10}, eq) == MPlacement::VertexOfTr);
  CHECK(classify_M(1.25, Bary3::centroid()) == MPlacement::InteriorTr);
  CHECK(classify_M(1.5, Bary3::centroid()) == MPlacement::VertexOfTr);

  const Bary3 t2 = tr_vertex(1.25, 1);
  CHECK(classify_M(1.25, t2) == MPlacement::VertexOfTr);
  const Bary3 c = Bary3::centroid();
  Bary3 in, out;
  for (int k = 0; k < 3; ++k) {
    in[k] = t2[k] + 1e-6 * (c[k] - t2[k]) / 0.27;
    out[k] = t2[k] - 1e-6 * (c[k] - t2[k]) / 0.27;
  }
  CHECK(classify_M(1.25, in) == MPlacement::InteriorTr);
  CHECK(classify_M(1.25, out) == MPlacement::OutsideTr);

  const std::array<Rational, 3> t2q{Rational(1, 5), Rational(3, 5), Rational(1, 5)};
  CHECK(classify_M_exact(Rational(5, 4), t2q) == MPlacement::VertexOfTr);
  const std::array<Rational, 3> bq{Rational(3, 10), Rational(1, 2), Rational(1, 5)};
  CHECK(classify_M_exact(Rational(5, 4), bq) == MPlacement::BoundaryNonVertex);
  const std::array<Rational, 3> cq{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  CHECK(classify_M_exact(Rational(3, 2), cq) == MPlacement::VertexOfTr);
  CHECK(classify_M_exact(Rational(2), cq) == MPlacement::OutsideTr);
}

TEST_CASE("classifier agrees between barycentric and Cartesian forms") {
  Stream rng(derive_key(14, {}));
  const auto eq = BasicTriangleParams::equilateral();
  const Triangle2 te = Triangle2::equilateral();
  for (int i = 0; i < 10000; ++i) {
    const double r = 1.0 + 0.6 * rng.uniform();
    const Bary3 m = random_interior_m(rng);
    CHECK(classify_M(r, m) == classify_M(r, reconstruct(te, m), eq));
  }
}

TEST_CASE("Gamma_1 thresholds") {
  const auto p = params(2.0);
  const Bary3 x{{0.6, 0.3, 0.1}};
  const std::vector<Bary3> one{x};
  const auto t = gamma1_thresholds(p, one);
  for (int j = 0; j < 3; ++j) CHECK(t.tau[static_cast<std::size_t>(j)] == doctest::Approx(1 - (1 - x[j]) / 2));
  const std::vector<Bary3> two{x, Bary3{{0.2, 0.5, 0.3}}};
  const auto t1 = gamma1_thresholds(params(1.0), two);
  CHECK(t1.tau[0] == doctest::Approx(0.2));
  CHECK(t1.tau[1] == doctest::Approx(0.3));
  CHECK(t1.tau[2] == doctest::Approx(0.1));

  const std::vector<Bary3> cen{Bary3::centroid()};
  CHECK(gamma1_contains(p, gamma1_thresholds(p, cen), Bary3::centroid()));
  const auto inf = ProximityParams::make(Factor::infinity(), Bary3::centroid());
  CHECK(gamma1_contains(inf, gamma1_thresholds(inf, two), Bary3{{0.01, 0.01, 0.98}}));
}

TEST_CASE("Gamma_1 grid matches the definition") {
  Stream rng(derive_key(15, {}));
  const Triangle2 te = Triangle2::equilateral();
  // Incenter of T((0,0),(3,0),(0.5,2)) in barycentric form.
  const Triangle2 tri({0, 0}, {3, 0}, {0.5, 2});
  const auto side = [&](int a, int b) { return std::hypot(tri[a].x - tri[b].x, tri[a].y - tri[b].y); };
  const double la = side(1, 2), lb = side(0, 2), lc = side(0, 1);
  const Bary3 incenter{{la / (la + lb + lc), lb / (la + lb + lc), lc / (la + lb + lc)}};
  const auto p = params(2.0, incenter);
  std::vector<Bary3> pts(7);
  for (auto& b : pts) b = sample_uniform_bary(rng);
  const auto t = gamma1_thresholds(p, pts);
  int inside = 0;
  for (int i = 0; i < 200; ++i)
    for (int j = 0; j < 200; ++j) {
      const Point2 z{(i + 0.5) / 200, (j + 0.5) / 200 * kS3 / 2};
      const Bary3 bz = barycentric(te, z);
      if (!bz.inside()) continue;
      bool all = true;
      for (const auto& x : pts) all = all && arc_predicate(p, bz, x);
      CHECK(gamma1_contains(p, t, bz) == all);
      inside += all;
    }
  CHECK(inside > 0);
}

TEST_CASE("properties over random triples") {
  Stream rng(derive_key(16, {}));
  const Triangle2 te = Triangle2::equilateral();
  for (int i = 0; i < 10000; ++i) {
    const Bary3 m = random_interior_m(rng);
    const Bary3 x = sample_uniform_bary(rng), z = sample_uniform_bary(rng);
    const double r1 = 1 + rng.uniform(), r2 = r1 + rng.uniform();
    const auto p1 = params(r1, m), p2 = params(r2, m);
    // Self-arc and nesting in r.
    REQUIRE(arc_predicate(p1, x, x));
    if (arc_predicate(p1, x, z)) REQUIRE(arc_predicate(p2, x, z));
    // Superset region lies inside Gamma_1 of any set.
    const std::vector<Bary3> set{z, sample_uniform_bary(rng), sample_uniform_bary(rng)};
    if (superset_contains(p1, x)) REQUIRE(gamma1_contains(p1, gamma1_thresholds(p1, set), x));
    // Affine invariance: recompute coordinates after mapping everything.
    const AffineMap2 a(0.5 + rng.uniform(), rng.uniform() - 0.5, rng.uniform() - 0.5, 0.5 + rng.uniform(),
                       rng.uniform() * 10, rng.uniform() * 10);
    if (std::abs(a.determinant()) < 0.05) continue;
    const Triangle2 img = a.apply(te);
    const Bary3 xi = barycentric(img, a(reconstruct(te, x))), zi = barycentric(img, a(reconstruct(te, z)));
    const Bary3 ord_x = barycentric(te, reconstruct(te, x)), ord_z = barycentric(te, reconstruct(te, z));
    for (int k = 0; k < 3; ++k) {
      REQUIRE(std::abs(xi[k] - ord_x[k]) <= 1e-10);
      REQUIRE(std::abs(zi[k] - ord_z[k]) <= 1e-10);
    }
    CHECK(arc_predicate(p1, xi, zi) == arc_predicate(p1, ord_x, ord_z));
  }
}

TEST_CASE("Gamma_1 equivalence on random sets") {
  Stream rng(derive_key(17, {}));
  for (int i = 0; i < 10000; ++i) {
    const auto p = params(1 + rng.uniform(), random_interior_m(rng));
    std::vector<Bary3> set(1 + static_cast<std::size_t>(rng.uniform() * 20));
    for (auto& b : set) b = sample_uniform_bary(rng);
    const Bary3 z = sample_uniform_bary(rng);
    bool all = true;
    for (const auto& x : set) all = all && arc_predicate(p, z, x);
    REQUIRE(gamma1_contains(p, gamma1_thresholds(p, set), z) == all);
  }
}

TEST_CASE("edge extrema") {
  const std::vector<Bary3> one{Bary3{{0.2, 0.3, 0.5}}};
  const auto e1 = edge_extrema(one);
  CHECK(e1[0] == 0);
  CHECK(e1[1] == 0);
  CHECK(e1[2] == 0);
  Stream rng(derive_key(18, {}));
  for (int i = 0; i < 1000; ++i) {
    const std::vector<Bary3> two{sample_uniform_bary(rng), sample_uniform_bary(rng)};
    const auto e = edge_extrema(two);
    const bool all_same = e[0] == e[1] && e[1] == e[2];
    CHECK_FALSE(all_same);
  }
  CHECK_THROWS_AS(edge_extrema(std::span<const Bary3>{}), std::invalid_argument);
}
