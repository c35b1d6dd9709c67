#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pcd/delaunay.hpp"
#include "pcd/geom2.hpp"
#include "pcd/proximity.hpp"

namespace pcd {

/// Minimum dominating set of a proximity catch digraph.
struct DominationResult {
  int gamma = 0;
  std::vector<std::size_t> witness;  // sorted point indices
};

/// Out-neighbourhoods: arcs[i] lists j != i with z_j in N(x_i), ascending.
using Adjacency = std::vector<std::vector<std::size_t>>;

/// One triangle, its parameters and the data inside it.
class PcdInstance {
 public:
  /// Throws GeometryError if a point lies outside the closed triangle.
  PcdInstance(Triangle2 triangle, ProximityParams params, std::vector<Point2> points);

  const Triangle2& triangle() const { return triangle_; }
  const ProximityParams& params() const { return params_; }
  const std::vector<Point2>& points() const { return points_; }
  const std::vector<Bary3>& bary() const { return bary_; }
  std::size_t size() const { return points_.size(); }

 private:
  Triangle2 triangle_;
  ProximityParams params_;
  std::vector<Point2> points_;
  std::vector<Bary3> bary_;
};

Adjacency build_arcs(const ProximityParams& params, std::span<const Bary3> points);
inline Adjacency build_arcs(const PcdInstance& inst) { return build_arcs(inst.params(), inst.bary()); }
std::size_t arc_count(const Adjacency& arcs);

/// Exact domination number via the per-region candidates (the point with the
/// smallest own-vertex coordinate in each vertex region). Returns the
/// lexicographically smallest minimum set among candidates.
/// Throws std::invalid_argument on an empty point set.
DominationResult domination_exact(const ProximityParams& params, std::span<const Bary3> points);
inline DominationResult domination_exact(const PcdInstance& inst) {
  return domination_exact(inst.params(), inst.bary());
}

/// Exhaustive search over subsets of increasing size on the full arc set.
/// Throws std::invalid_argument when n == 0 or n > kBruteForceLimit.
inline constexpr std::size_t kBruteForceLimit = 25;
DominationResult domination_bruteforce(const Adjacency& arcs);
inline DominationResult domination_bruteforce(const PcdInstance& inst) {
  return domination_bruteforce(build_arcs(inst));
}

/// True iff the witness set dominates every vertex of the digraph.
bool dominates(const Adjacency& arcs, std::span<const std::size_t> witness);

struct CellResult {
  std::size_t cell = 0;
  std::vector<std::size_t> members;  // indices into the data list
  DominationResult result;           // witness holds data indices
};

struct MultiTriangleResult {
  int total_gamma = 0;
  std::vector<CellResult> cells;  // nonempty cells only, ascending cell index
  std::size_t kept = 0;
  std::size_t discarded = 0;
  std::size_t cell_count = 0;
};

/// Splits data among Delaunay cells (shared edges go to the smallest cell
/// index), drops points outside the hull, and sums per-cell domination
/// numbers. M is applied in each cell through its barycentric coordinates.
MultiTriangleResult domination_multi(const DelaunayTriangulation& dt, std::span<const Point2> data,
                                     const ProximityParams& params);
MultiTriangleResult domination_multi(std::span<const Point2> anchors, std::span<const Point2> data,
                                     const ProximityParams& params);

}  // namespace pcd
