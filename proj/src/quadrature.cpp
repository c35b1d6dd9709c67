#include "pcd/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace pcd::quad {
namespace {

// Kronrod abscissae (positive half, descending) and weights; the Gauss
// 7-point rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// Full 15-point node list on [-1,1] with Kronrod and Gauss weights (0 when
// the node is not a Gauss node).
struct Rule {
  std::array<double, 15> x{}, wk{}, wg{};
  Rule() {
    for (int i = 0; i < 7; ++i) {
      x[i] = -kXgk[i];
      x[14 - i] = kXgk[i];
      wk[i] = wk[14 - i] = kWgk[i];
      wg[i] = wg[14 - i] = (i % 2 == 1) ? kWg[i / 2] : 0.0;
    }
    x[7] = 0.0;
    wk[7] = kWgk[7];
    wg[7] = kWg[3];
  }
};
const Rule& rule() {
  static const Rule r;
  return r;
}

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const std::function<double(double)>& f, double a, double b) {
  const Rule& R = rule();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double k = 0, g = 0;
  for (int i = 0; i < 15; ++i) {
    const double v = f(c + h * R.x[i]);
    k += R.wk[i] * v;
    g += R.wg[i] * v;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

struct Cell {
  double ax, bx, ay, by, value, error;
  bool operator<(const Cell& o) const { return error < o.error; }
};

Cell gk15x15(const std::function<double(double, double)>& f, double ax, double bx, double ay, double by) {
  const Rule& R = rule();
  const double cx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
  const double cy = 0.5 * (ay + by), hy = 0.5 * (by - ay);
  double k = 0, g = 0;
  for (int i = 0; i < 15; ++i) {
    const double x = cx + hx * R.x[i];
    for (int j = 0; j < 15; ++j) {
      const double v = f(x, cy + hy * R.x[j]);
      k += R.wk[i] * R.wk[j] * v;
      g += R.wg[i] * R.wg[j] * v;
    }
  }
  const double area = hx * hy;
  return {ax, bx, ay, by, k * area, std::abs((k - g) * area)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 std::size_t max_evaluations) {
  std::priority_queue<Interval> heap;
  Interval first = gk15(f, a, b);
  double value = first.value, error = first.error;
  std::size_t evals = 15;
  heap.push(first);
  while (error > abs_tol && evals + 30 <= max_evaluations) {
    const Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Interval l = gk15(f, worst.a, mid), r = gk15(f, mid, worst.b);
    evals += 30;
    value += l.value + r.value - worst.value;
    error += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
  }
  // Recompute sums to shed accumulated cancellation from the running updates.
  double v = 0, e = 0;
  while (!heap.empty()) {
    v += heap.top().value;
    e += heap.top().error;
    heap.pop();
  }
  return {v, e, evals, e <= abs_tol};
}

Result integrate(const std::function<double(double, double)>& f, double ax, double bx, double ay, double by,
                 double abs_tol, std::size_t max_evaluations) {
  std::priority_queue<Cell> heap;
  Cell first = gk15x15(f, ax, bx, ay, by);
  double error = first.error;
  std::size_t evals = 225;
  heap.push(first);
  while (error > abs_tol && evals + 900 <= max_evaluations) {
    const Cell w = heap.top();
    heap.pop();
    const double mx = 0.5 * (w.ax + w.bx), my = 0.5 * (w.ay + w.by);
    const std::array<Cell, 4> parts{gk15x15(f, w.ax, mx, w.ay, my), gk15x15(f, mx, w.bx, w.ay, my),
                                    gk15x15(f, w.ax, mx, my, w.by), gk15x15(f, mx, w.bx, my, w.by)};
    evals += 900;
    error -= w.error;
    for (const Cell& c : parts) {
      error += c.error;
      heap.push(c);
    }
  }
  double v = 0, e = 0;
  while (!heap.empty()) {
    v += heap.top().value;
    e += heap.top().error;
    heap.pop();
  }
  return {v, e, evals, e <= abs_tol};
}

Result integrate_half_line(const std::function<double(double)>& f, double abs_tol) {
  return integrate(
      [&](double t) {
        const double s = 1.0 - t;
        return f(t / s) / (s * s);
      },
      0.0, 1.0, abs_tol);
}

Result integrate_quadrant(const std::function<double(double, double)>& f, double abs_tol) {
  return integrate(
      [&](double t1, double t2) {
        const double s1 = 1.0 - t1, s2 = 1.0 - t2;
        return f(t1 / s1, t2 / s2) / (s1 * s1 * s2 * s2);
      },
      0.0, 1.0, 0.0, 1.0, abs_tol);
}

}  // namespace pcd::quad
