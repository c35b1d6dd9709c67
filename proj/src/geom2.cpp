#include "pcd/geom2.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pcd/predicates.hpp"
#include "pcd/rng.hpp"

namespace pcd {

Point2 make_point(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw GeometryError("non-finite coordinate");
  return {x, y};
}

bool Bary3::inside(double tol) const { return b[0] >= -tol && b[1] >= -tol && b[2] >= -tol; }

Bary3 Bary3::vertex(int j) {
  Bary3 out{{0.0, 0.0, 0.0}};
  out[j] = 1.0;
  return out;
}

Bary3 Bary3::make(double b1, double b2, double b3) {
  if (!std::isfinite(b1) || !std::isfinite(b2) || !std::isfinite(b3))
    throw GeometryError("non-finite barycentric coordinate");
  Bary3 out{{b1, b2, b3}};
  if (std::abs(out.sum() - 1.0) > 1e-12) throw GeometryError("barycentric coordinates must sum to 1");
  return out;
}

double signed_area(Point2 a, Point2 b, Point2 c) {
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

Triangle2::Triangle2(Point2 a, Point2 b, Point2 c) : v_{a, b, c} {
  for (const Point2& p : v_) make_point(p.x, p.y);
  const double xmin = std::min({a.x, b.x, c.x}), xmax = std::max({a.x, b.x, c.x});
  const double ymin = std::min({a.y, b.y, c.y}), ymax = std::max({a.y, b.y, c.y});
  const double diag2 = (xmax - xmin) * (xmax - xmin) + (ymax - ymin) * (ymax - ymin);
  const int o = orient2d(a, b, c);
  const double area = signed_area(a, b, c);
  if (o == 0 || std::abs(area) <= 1e-14 * diag2) throw GeometryError("degenerate triangle");
  if (o < 0) std::swap(v_[1], v_[2]);
}

double Triangle2::area() const { return signed_area(v_[0], v_[1], v_[2]); }

Point2 Triangle2::centroid() const {
  return {(v_[0].x + v_[1].x + v_[2].x) / 3.0, (v_[0].y + v_[1].y + v_[2].y) / 3.0};
}

Triangle2 Triangle2::equilateral() { return {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}}; }

Bary3 barycentric(const Triangle2& tri, Point2 p) {
  const Point2 &a = tri[0], &b = tri[1], &c = tri[2];
  const double det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  const double b2 = ((p.x - a.x) * (c.y - a.y) - (p.y - a.y) * (c.x - a.x)) / det;
  const double b3 = ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)) / det;
  return Bary3{{1.0 - b2 - b3, b2, b3}};
}

Point2 reconstruct(const Triangle2& tri, const Bary3& b) {
  return {b[0] * tri[0].x + b[1] * tri[1].x + b[2] * tri[2].x,
          b[0] * tri[0].y + b[1] * tri[1].y + b[2] * tri[2].y};
}

bool contains(const Triangle2& tri, Point2 p, double tol) { return barycentric(tri, p).inside(tol); }

AffineMap2::AffineMap2(double a11, double a12, double a21, double a22, double tx, double ty)
    : a11_(a11), a12_(a12), a21_(a21), a22_(a22), tx_(tx), ty_(ty) {
  const double scale = std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22)});
  if (!(std::abs(determinant()) > 1e-300) || std::abs(determinant()) <= 1e-15 * scale * scale)
    throw GeometryError("singular affine map");
}

Point2 AffineMap2::operator()(Point2 p) const {
  return {a11_ * p.x + a12_ * p.y + tx_, a21_ * p.x + a22_ * p.y + ty_};
}

AffineMap2 AffineMap2::inverse() const {
  const double det = determinant();
  const double i11 = a22_ / det, i12 = -a12_ / det, i21 = -a21_ / det, i22 = a11_ / det;
  return {i11, i12, i21, i22, -(i11 * tx_ + i12 * ty_), -(i21 * tx_ + i22 * ty_)};
}

AffineMap2 AffineMap2::compose(const AffineMap2& in) const {
  return {a11_ * in.a11_ + a12_ * in.a21_, a11_ * in.a12_ + a12_ * in.a22_,
          a21_ * in.a11_ + a22_ * in.a21_, a21_ * in.a12_ + a22_ * in.a22_,
          a11_ * in.tx_ + a12_ * in.ty_ + tx_, a21_ * in.tx_ + a22_ * in.ty_ + ty_};
}

Triangle2 AffineMap2::apply(const Triangle2& t) const { return {(*this)(t[0]), (*this)(t[1]), (*this)(t[2])}; }

BasicTriangleParams BasicTriangleParams::make(double c1, double c2) {
  constexpr double slack = 1e-12;
  if (!(c1 > 0.0 && c1 <= 0.5 + slack && c2 > 0.0 && (1 - c1) * (1 - c1) + c2 * c2 <= 1.0 + slack))
    throw GeometryError("invalid basic triangle parameters");
  return {c1, c2};
}

Triangle2 BasicTriangleParams::triangle() const { return {{0.0, 0.0}, {1.0, 0.0}, {c1, c2}}; }

BasicReduction to_basic_triangle(const Triangle2& tri) {
  // Longest edge (a,b) goes to [0,1]; the apex c must land closer to (0,0)
  // than to (1,0), so choose the endpoint nearer to c as the origin.
  auto len2 = [](Point2 p, Point2 q) { return (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y); };
  int ia = 0, ib = 1, ic = 2;
  double best = -1.0;
  for (int k = 0; k < 3; ++k) {
    const int i = k, j = (k + 1) % 3;
    const double l = len2(tri[i], tri[j]);
    if (l > best) best = l, ia = i, ib = j, ic = (k + 2) % 3;
  }
  if (len2(tri[ia], tri[ic]) > len2(tri[ib], tri[ic])) std::swap(ia, ib);

  const Point2 a = tri[ia], b = tri[ib], c = tri[ic];
  const double L = std::sqrt(best);
  const double ux = (b.x - a.x) / L, uy = (b.y - a.y) / L;
  // Rotation taking u to +x, scaled by 1/L.
  double r11 = ux / L, r12 = uy / L, r21 = -uy / L, r22 = ux / L;
  const double cy = r21 * (c.x - a.x) + r22 * (c.y - a.y);
  if (cy < 0) r21 = -r21, r22 = -r22;  // reflect so the apex has positive ordinate
  AffineMap2 m(r11, r12, r21, r22, -(r11 * a.x + r12 * a.y), -(r21 * a.x + r22 * a.y));
  const Point2 cc = m(c);
  BasicReduction out{m, BasicTriangleParams::make(std::min(cc.x, 0.5), cc.y), {ia, ib, ic}};
  return out;
}

AffineMap2 phi_e(const BasicTriangleParams& p) {
  const double s3 = std::sqrt(3.0);
  // Shear sends the apex (c1, c2) to x = 1/2; scaling sends c2 to sqrt(3)/2.
  return {1.0, (0.5 - p.c1) / p.c2, 0.0, s3 / (2.0 * p.c2), 0.0, 0.0};
}

Bary3 sample_uniform_bary(Stream& rng) {
  double u = rng.uniform(), v = rng.uniform();
  if (u + v > 1.0) u = 1.0 - u, v = 1.0 - v;
  return Bary3{{1.0 - u - v, u, v}};
}

Point2 sample_uniform_triangle(const Triangle2& tri, Stream& rng) {
  double u = rng.uniform(), v = rng.uniform();
  if (u + v > 1.0) u = 1.0 - u, v = 1.0 - v;
  return tri[0] + u * (tri[1] - tri[0]) + v * (tri[2] - tri[0]);
}

std::vector<Point2> convex_hull(std::span<const Point2> points) {
  if (points.size() < 3) throw GeometryError("convex hull needs at least 3 points");
  std::vector<Point2> p(points.begin(), points.end());
  std::sort(p.begin(), p.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  // Andrew's monotone chain with exact orientation; collinear points dropped.
  std::vector<Point2> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && orient2d(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient2d(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k > 0 ? k - 1 : 0);
  if (h.size() < 3) throw GeometryError("all points are collinear");
  return h;
}

double polygon_area(std::span<const Point2> poly) {
  double s = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % poly.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return 0.5 * s;
}

}  // namespace pcd
