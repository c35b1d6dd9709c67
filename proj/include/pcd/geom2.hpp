#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace pcd {

class Stream;

/// Error raised for degenerate or otherwise invalid geometric input.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point2, Point2) = default;
};

/// Throws GeometryError if either coordinate is NaN or infinite.
Point2 make_point(double x, double y);

/// Barycentric coordinates relative to a triangle. Index j refers to vertex j.
struct Bary3 {
  std::array<double, 3> b{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

  double operator[](int j) const { return b[static_cast<std::size_t>(j)]; }
  double& operator[](int j) { return b[static_cast<std::size_t>(j)]; }
  double sum() const { return b[0] + b[1] + b[2]; }
  /// All coordinates >= -tol.
  bool inside(double tol = 1e-12) const;

  static Bary3 centroid() { return {}; }
  static Bary3 vertex(int j);
  /// Validates finiteness, sum to one (1e-12) and returns the triple.
  static Bary3 make(double b1, double b2, double b3);
  friend bool operator==(const Bary3&, const Bary3&) = default;
};

/// Triangle with counterclockwise vertex order.
class Triangle2 {
 public:
  /// Reorders to counterclockwise. Rejects |area| <= 1e-14 * bbox_diag^2.
  Triangle2(Point2 a, Point2 b, Point2 c);

  const Point2& operator[](int j) const { return v_[static_cast<std::size_t>(j)]; }
  const std::array<Point2, 3>& vertices() const { return v_; }
  double area() const;
  Point2 centroid() const;

  /// The equilateral triangle T((0,0),(1,0),(1/2, sqrt(3)/2)).
  static Triangle2 equilateral();

 private:
  std::array<Point2, 3> v_;
};

/// Signed area of (a,b,c); positive when counterclockwise. Plain double arithmetic.
double signed_area(Point2 a, Point2 b, Point2 c);

Bary3 barycentric(const Triangle2& tri, Point2 p);
Point2 reconstruct(const Triangle2& tri, const Bary3& b);
bool contains(const Triangle2& tri, Point2 p, double tol = 1e-12);

/// p -> linear * p + shift.
class AffineMap2 {
 public:
  AffineMap2() = default;
  /// Throws GeometryError when the linear part is singular.
  AffineMap2(double a11, double a12, double a21, double a22, double tx, double ty);

  Point2 operator()(Point2 p) const;
  double determinant() const { return a11_ * a22_ - a12_ * a21_; }
  AffineMap2 inverse() const;
  /// (*this) after (inner): p -> this(inner(p)).
  AffineMap2 compose(const AffineMap2& inner) const;
  Triangle2 apply(const Triangle2& t) const;

  static AffineMap2 identity() { return {}; }

 private:
  double a11_ = 1, a12_ = 0, a21_ = 0, a22_ = 1, tx_ = 0, ty_ = 0;
};

/// Shape parameters of T((0,0),(1,0),(c1,c2)).
struct BasicTriangleParams {
  double c1 = 0.5;
  double c2 = 0.8660254037844386;

  /// Checks 0 < c1 <= 1/2, c2 > 0 and (1-c1)^2 + c2^2 <= 1 (with 1e-12 slack).
  static BasicTriangleParams make(double c1, double c2);
  static BasicTriangleParams equilateral() { return {}; }
  Triangle2 triangle() const;
};

struct BasicReduction {
  AffineMap2 map;             // similarity onto T_b
  BasicTriangleParams params;
  std::array<int, 3> order;   // map(tri[order[k]]) is the k-th vertex of T_b
};

/// Similarity (rotation, reflection, translation, uniform scaling) taking the
/// triangle onto its basic form: longest edge onto [0,1], apex with c1 <= 1/2.
BasicReduction to_basic_triangle(const Triangle2& tri);

/// Affine map taking T_b to the equilateral triangle, fixing (0,0) and (1,0).
AffineMap2 phi_e(const BasicTriangleParams& params);

/// Uniform point in the closed triangle (reflection method).
Point2 sample_uniform_triangle(const Triangle2& tri, Stream& rng);
/// Uniform barycentric triple (same law as the Cartesian sampler, triangle-free).
Bary3 sample_uniform_bary(Stream& rng);

/// Counterclockwise hull cycle without collinear points. Throws if all inputs
/// are collinear or fewer than three points are given.
std::vector<Point2> convex_hull(std::span<const Point2> points);
double polygon_area(std::span<const Point2> polygon);

}  // namespace pcd
