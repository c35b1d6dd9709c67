#include "pcd/predicates.hpp"

#include <cmath>
#include <vector>

namespace pcd {
namespace {

constexpr double kEps = 0x1.0p-53;
constexpr double kCcwBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccBound = (10.0 + 96.0 * kEps) * kEps;

// Nonoverlapping floating-point expansion, components in increasing magnitude,
// zero components eliminated. Value is the exact sum of the components.
using Expansion = std::vector<double>;

void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  e = (a - av) + (b - bv);
}

Expansion grow(const Expansion& e, double b) {
  Expansion out;
  out.reserve(e.size() + 1);
  double q = b;
  for (double c : e) {
    double s, h;
    two_sum(q, c, s, h);
    if (h != 0.0) out.push_back(h);
    q = s;
  }
  if (q != 0.0 || out.empty()) out.push_back(q);
  return out;
}

Expansion add(const Expansion& e, const Expansion& f) {
  Expansion out = e;
  for (double c : f) out = grow(out, c);
  return out;
}

Expansion negate(Expansion e) {
  for (double& c : e) c = -c;
  return e;
}

Expansion diff(double a, double b) {
  double s, h;
  two_sum(a, -b, s, h);
  return grow(Expansion{h}, s);
}

Expansion mul(const Expansion& e, const Expansion& f) {
  Expansion out;
  for (double a : e) {
    for (double b : f) {
      const double p = a * b;
      const double err = std::fma(a, b, -p);
      out = grow(grow(out, err), p);
    }
  }
  return out;
}

int sign_of(const Expansion& e) {
  for (auto it = e.rbegin(); it != e.rend(); ++it)
    if (*it != 0.0) return *it > 0 ? 1 : -1;
  return 0;
}

}  // namespace

int orient2d(Point2 a, Point2 b, Point2 c) {
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double bound = kCcwBound * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;

  const Expansion l = mul(diff(a.x, c.x), diff(b.y, c.y));
  const Expansion r = mul(diff(a.y, c.y), diff(b.x, c.x));
  return sign_of(add(l, negate(r)));
}

int incircle(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                     clift * (adx * bdy - bdx * ady);
  const double permanent = (std::abs(bdx * cdy) + std::abs(cdx * bdy)) * alift +
                           (std::abs(cdx * ady) + std::abs(adx * cdy)) * blift +
                           (std::abs(adx * bdy) + std::abs(bdx * ady)) * clift;
  const double bound = kIccBound * permanent;
  if (det > bound) return 1;
  if (-det > bound) return -1;

  const Expansion ex = diff(a.x, d.x), ey = diff(a.y, d.y);
  const Expansion fx = diff(b.x, d.x), fy = diff(b.y, d.y);
  const Expansion gx = diff(c.x, d.x), gy = diff(c.y, d.y);
  const Expansion la = add(mul(ex, ex), mul(ey, ey));
  const Expansion lb = add(mul(fx, fx), mul(fy, fy));
  const Expansion lc = add(mul(gx, gx), mul(gy, gy));
  const Expansion bc = add(mul(fx, gy), negate(mul(gx, fy)));
  const Expansion ca = add(mul(gx, ey), negate(mul(ex, gy)));
  const Expansion ab = add(mul(ex, fy), negate(mul(fx, ey)));
  return sign_of(add(add(mul(la, bc), mul(lb, ca)), mul(lc, ab)));
}

}  // namespace pcd
