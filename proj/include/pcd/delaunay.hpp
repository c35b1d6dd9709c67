#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "pcd/geom2.hpp"

namespace pcd {

/// Delaunay triangulation of a planar anchor set.
///
/// Cells are counterclockwise index triples into points(). neighbors()[c][k]
/// is the cell across the edge opposite vertex k of cell c, or -1 on the hull.
/// Cocircular configurations keep whichever diagonal the insertion order
/// produced: an in-circle determinant of exactly zero never triggers a flip.
class DelaunayTriangulation {
 public:
  using Cell = std::array<int, 3>;

  const std::vector<Point2>& points() const { return points_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<std::array<int, 3>>& neighbors() const { return neighbors_; }
  std::size_t size() const { return cells_.size(); }

  Triangle2 triangle(std::size_t cell) const;
  /// Smallest-index cell containing p (closed, barycentric slack tol), if any.
  std::optional<std::size_t> locate(Point2 p, double tol = 1e-12) const;
  double total_area() const;

  /// True iff no anchor lies strictly inside any cell's circumcircle.
  bool is_delaunay() const;

 private:
  friend DelaunayTriangulation delaunay(std::span<const Point2> points);
  std::vector<Point2> points_;
  std::vector<Cell> cells_;
  std::vector<std::array<int, 3>> neighbors_;
};

/// Incremental Bowyer-Watson in input order with exact predicates.
/// Throws GeometryError for fewer than 3 points, all-collinear input or
/// duplicate anchors.
DelaunayTriangulation delaunay(std::span<const Point2> points);

}  // namespace pcd
