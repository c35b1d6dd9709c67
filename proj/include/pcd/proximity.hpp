#pragma once

// r-factor proportional-edge proximity regions, expressed in barycentric
// coordinates of the working triangle. For x in the M-vertex region of
// vertex j, the proximity region is {z : 1 - b_j(z) <= r (1 - b_j(x))}, which
// is the triangle homothetic to the working triangle from vertex j, scaled by
// r times the normalized distance of x from vertex j, clipped to the triangle.

#include <array>
#include <optional>
#include <span>
#include <string>

#include "pcd/geom2.hpp"
#include "pcd/rational.hpp"

namespace pcd {

/// Slack for region-membership comparisons, in barycentric units.
inline constexpr double kBaryTol = 1e-12;

/// Expansion factor r in [1, +inf]. Infinity is a distinct state, so
/// predicates can short-circuit instead of relying on a large float.
class Factor {
 public:
  /// Throws std::invalid_argument unless r >= 1 and finite.
  static Factor finite(double r);
  /// Exact rational factor; double value is the nearest double.
  static Factor exact(Rational r);
  static Factor infinity() { return Factor(); }

  bool is_infinite() const { return infinite_; }
  double value() const;
  const std::optional<Rational>& rational() const { return rational_; }
  std::string str() const;

 private:
  Factor() = default;
  bool infinite_ = true;
  double value_ = 0.0;
  std::optional<Rational> rational_;
};

struct ProximityParams {
  Factor r = Factor::finite(1.5);
  Bary3 m = Bary3::centroid();

  /// Validates that M is strictly interior.
  static ProximityParams make(Factor r, Bary3 m);
};

/// Index j in {0,1,2} maximizing b_j / m_j; ties go to the smallest index.
int vertex_region_of(const Bary3& m, const Bary3& b);
inline int vertex_region_of(const ProximityParams& p, const Bary3& b) { return vertex_region_of(p.m, b); }

/// True iff z lies in the proximity region of x.
bool arc_predicate(const ProximityParams& p, const Bary3& x, const Bary3& z);

/// True iff the proximity region of x is the whole triangle.
bool superset_contains(const ProximityParams& p, const Bary3& x);

/// The triangle of centers M for which the superset region is empty, in the
/// barycentric form {b : b_j >= 1 - 1/r for all j}.
struct TrTriangle {
  bool empty = true;
  std::array<Point2, 3> t{};  // Cartesian vertices t1, t2, t3 in the basic triangle
  std::array<Bary3, 3> bary{};
};

/// Vertices from the closed-form Cartesian expressions in the basic triangle.
/// Nonempty for r <= 3/2 (a single repeated point at r = 3/2).
/// Throws std::invalid_argument for r < 1.
TrTriangle tr_triangle(double r, const BasicTriangleParams& basic);

/// Barycentric coordinates of t_j(r): 2/r - 1 at index j, 1 - 1/r elsewhere.
Bary3 tr_vertex(double r, int j);

enum class MPlacement { OutsideTr, InteriorTr, BoundaryNonVertex, VertexOfTr };
std::string to_string(MPlacement p);

/// Classification of an interior center against T_r, tolerance 1e-9.
MPlacement classify_M(double r, const Bary3& m, double tol = 1e-9);
/// Same classification carried out on the Cartesian half-plane constraints
/// in the basic triangle (M given in basic-triangle coordinates).
MPlacement classify_M(double r, Point2 m, const BasicTriangleParams& basic, double tol = 1e-9);
/// Exact classification for rational r and barycentric M.
MPlacement classify_M_exact(Rational r, const std::array<Rational, 3>& m);

/// Per-region barycentric ceilings of the Gamma_1 region of a point set:
/// tau_j = 1 - (1 - beta_j) / r with beta_j the smallest j-th coordinate.
struct Gamma1Thresholds {
  std::array<double, 3> tau{1.0, 1.0, 1.0};
};

/// Throws std::invalid_argument for an empty point list.
Gamma1Thresholds gamma1_thresholds(const ProximityParams& p, std::span<const Bary3> points);
/// True iff the proximity region of z contains every generating point.
bool gamma1_contains(const ProximityParams& p, const Gamma1Thresholds& t, const Bary3& z);

/// Indices of the points closest to each edge (smallest j-th coordinate),
/// ties to the smallest index. Throws std::invalid_argument when empty.
std::array<std::size_t, 3> edge_extrema(std::span<const Bary3> points);

}  // namespace pcd
