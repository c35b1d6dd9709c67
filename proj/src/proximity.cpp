#include "pcd/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pcd {

Factor Factor::finite(double r) {
  if (!std::isfinite(r) || r < 1.0) throw std::invalid_argument("expansion factor r must be finite and >= 1");
  Factor f;
  f.infinite_ = false;
  f.value_ = r;
  return f;
}

Factor Factor::exact(Rational r) {
  Factor f = finite(r.to_double());
  if (r < Rational(1)) throw std::invalid_argument("expansion factor r must be >= 1");
  f.rational_ = r;
  return f;
}

double Factor::value() const { return infinite_ ? std::numeric_limits<double>::infinity() : value_; }

std::string Factor::str() const {
  if (infinite_) return "inf";
  if (rational_) return rational_->str();
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

ProximityParams ProximityParams::make(Factor r, Bary3 m) {
  Bary3::make(m[0], m[1], m[2]);
  if (!(m[0] > 0 && m[1] > 0 && m[2] > 0)) throw std::invalid_argument("center M must be strictly interior");
  return {r, m};
}

int vertex_region_of(const Bary3& m, const Bary3& b) {
  const std::array<double, 3> ratio{b[0] / m[0], b[1] / m[1], b[2] / m[2]};
  const double best = std::max({ratio[0], ratio[1], ratio[2]});
  for (int j = 0; j < 3; ++j)
    if (ratio[static_cast<std::size_t>(j)] >= best - kBaryTol) return j;
  return 0;
}

bool arc_predicate(const ProximityParams& p, const Bary3& x, const Bary3& z) {
  if (p.r.is_infinite()) return true;
  const int j = vertex_region_of(p.m, x);
  return 1.0 - z[j] <= p.r.value() * (1.0 - x[j]) + kBaryTol;
}

bool superset_contains(const ProximityParams& p, const Bary3& x) {
  if (p.r.is_infinite()) return true;
  const int j = vertex_region_of(p.m, x);
  return x[j] <= 1.0 - 1.0 / p.r.value() + kBaryTol;
}

Bary3 tr_vertex(double r, int j) {
  const double lo = 1.0 - 1.0 / r;
  Bary3 b{{lo, lo, lo}};
  b[j] = 2.0 / r - 1.0;
  return b;
}

TrTriangle tr_triangle(double r, const BasicTriangleParams& basic) {
  if (!(r >= 1.0)) throw std::invalid_argument("tr_triangle requires r >= 1");
  TrTriangle out;
  if (r > 1.5) return out;
  const double c1 = basic.c1, c2 = basic.c2;
  out.empty = false;
  out.t[0] = {(r - 1) * (1 + c1) / r, c2 * (r - 1) / r};
  out.t[1] = {(2 - r + c1 * (r - 1)) / r, c2 * (r - 1) / r};
  // Intersection of the two slanted constraint lines; ordinate is c2(2-r)/r.
  out.t[2] = {(c1 * (2 - r) + r - 1) / r, c2 * (2 - r) / r};
  const Triangle2 tb = basic.triangle();
  for (int j = 0; j < 3; ++j) out.bary[static_cast<std::size_t>(j)] = barycentric(tb, out.t[static_cast<std::size_t>(j)]);
  return out;
}

std::string to_string(MPlacement p) {
  switch (p) {
    case MPlacement::OutsideTr: return "OutsideTr";
    case MPlacement::InteriorTr: return "InteriorTr";
    case MPlacement::BoundaryNonVertex: return "BoundaryNonVertex";
    case MPlacement::VertexOfTr: return "VertexOfTr";
  }
  return "?";
}

namespace {

// Placement from signed slacks of the three constraints g_j >= 0.
MPlacement placement_from_slacks(const std::array<double, 3>& g, double tol) {
  int on = 0;
  for (double s : g) {
    if (s < -tol) return MPlacement::OutsideTr;
    if (s <= tol) ++on;
  }
  if (on == 0) return MPlacement::InteriorTr;
  if (on == 1) return MPlacement::BoundaryNonVertex;
  return MPlacement::VertexOfTr;
}

}  // namespace

MPlacement classify_M(double r, const Bary3& m, double tol) {
  if (!(r >= 1.0)) throw std::invalid_argument("classify_M requires r >= 1");
  if (r > 1.5 + tol) return MPlacement::OutsideTr;
  const double lo = 1.0 - 1.0 / r;
  return placement_from_slacks({m[0] - lo, m[1] - lo, m[2] - lo}, tol);
}

MPlacement classify_M(double r, Point2 m, const BasicTriangleParams& basic, double tol) {
  if (!(r >= 1.0)) throw std::invalid_argument("classify_M requires r >= 1");
  if (r > 1.5 + tol) return MPlacement::OutsideTr;
  const double c1 = basic.c1, c2 = basic.c2;
  const std::array<double, 3> g{
      c2 * (1 - r * m.x) / (r * (1 - c1)) - m.y,
      c2 * (r * (m.x - 1) + 1) / (r * c1) - m.y,
      m.y - c2 * (r - 1) / r,
  };
  return placement_from_slacks(g, tol);
}

MPlacement classify_M_exact(Rational r, const std::array<Rational, 3>& m) {
  if (r < Rational(1)) throw std::invalid_argument("classify_M requires r >= 1");
  if (m[0] + m[1] + m[2] != Rational(1)) throw std::invalid_argument("barycentric M must sum to 1");
  if (r > Rational(3, 2)) return MPlacement::OutsideTr;
  const Rational lo = Rational(1) - Rational(1) / r;
  int on = 0;
  for (const Rational& c : m) {
    if (c < lo) return MPlacement::OutsideTr;
    if (c == lo) ++on;
  }
  if (on == 0) return MPlacement::InteriorTr;
  if (on == 1) return MPlacement::BoundaryNonVertex;
  return MPlacement::VertexOfTr;
}

Gamma1Thresholds gamma1_thresholds(const ProximityParams& p, std::span<const Bary3> points) {
  if (points.empty()) throw std::invalid_argument("gamma1_thresholds needs a nonempty point set");
  Gamma1Thresholds out;
  if (p.r.is_infinite()) return out;
  for (int j = 0; j < 3; ++j) {
    double beta = points[0][j];
    for (const Bary3& x : points) beta = std::min(beta, x[j]);
    out.tau[static_cast<std::size_t>(j)] = 1.0 - (1.0 - beta) / p.r.value();
  }
  return out;
}

bool gamma1_contains(const ProximityParams& p, const Gamma1Thresholds& t, const Bary3& z) {
  if (p.r.is_infinite()) return true;
  const int j = vertex_region_of(p.m, z);
  return z[j] <= t.tau[static_cast<std::size_t>(j)] + kBaryTol / p.r.value();
}

std::array<std::size_t, 3> edge_extrema(std::span<const Bary3> points) {
  if (points.empty()) throw std::invalid_argument("edge_extrema needs a nonempty point set");
  std::array<std::size_t, 3> idx{0, 0, 0};
  for (std::size_t i = 1; i < points.size(); ++i)
    for (int j = 0; j < 3; ++j)
      if (points[i][j] < points[idx[static_cast<std::size_t>(j)]][j]) idx[static_cast<std::size_t>(j)] = i;
  return idx;
}

}  // namespace pcd
