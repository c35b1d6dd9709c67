#include "pcd/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "pcd/predicates.hpp"

namespace pcd {
namespace {

using Cell = DelaunayTriangulation::Cell;
using Edge = std::pair<int, int>;

std::vector<std::array<int, 3>> build_neighbors(const std::vector<Cell>& cells) {
  std::map<Edge, std::pair<int, int>> edge_owner;  // directed edge -> (cell, opposite slot)
  for (int c = 0; c < static_cast<int>(cells.size()); ++c)
    for (int k = 0; k < 3; ++k)
      edge_owner[{cells[c][(k + 1) % 3], cells[c][(k + 2) % 3]}] = {c, k};
  std::vector<std::array<int, 3>> nb(cells.size(), {-1, -1, -1});
  for (int c = 0; c < static_cast<int>(cells.size()); ++c)
    for (int k = 0; k < 3; ++k) {
      auto it = edge_owner.find({cells[c][(k + 2) % 3], cells[c][(k + 1) % 3]});
      if (it != edge_owner.end()) nb[c][k] = it->second.first;
    }
  return nb;
}

// Fills reflex pockets between the surviving cells and the convex hull. Only
// reached when hull points are so close to collinear that the finite
// super-triangle cut off some hull cells.
void fill_pockets(const std::vector<Point2>& pts, std::vector<Cell>& cells) {
  for (int guard = 0; guard < 4 * static_cast<int>(pts.size()) + 8; ++guard) {
    std::set<Edge> directed;
    for (const Cell& c : cells)
      for (int k = 0; k < 3; ++k) directed.insert({c[k], c[(k + 1) % 3]});
    std::map<int, int> next;
    for (const Edge& e : directed)
      if (!directed.count({e.second, e.first})) {
        if (next.count(e.first)) throw GeometryError("delaunay: pinched boundary during hull repair");
        next[e.first] = e.second;
      }
    bool added = false;
    for (const auto& [a, b] : next) {
      const int c = next.at(b);
      if (orient2d(pts[a], pts[b], pts[c]) >= 0) continue;
      bool empty = true;
      for (int q = 0; q < static_cast<int>(pts.size()) && empty; ++q) {
        if (q == a || q == b || q == c) continue;
        empty = !(orient2d(pts[a], pts[c], pts[q]) >= 0 && orient2d(pts[c], pts[b], pts[q]) >= 0 &&
                  orient2d(pts[b], pts[a], pts[q]) >= 0);
      }
      if (!empty) continue;
      cells.push_back({a, c, b});
      added = true;
      break;
    }
    if (!added) return;
  }
  throw GeometryError("delaunay: hull repair did not converge");
}

void lawson_flip(const std::vector<Point2>& pts, std::vector<Cell>& cells) {
  bool changed = true;
  for (std::size_t pass = 0; changed && pass < 10 * cells.size() + 10; ++pass) {
    changed = false;
    const auto nb = build_neighbors(cells);
    for (int c = 0; c < static_cast<int>(cells.size()) && !changed; ++c)
      for (int k = 0; k < 3 && !changed; ++k) {
        const int o = nb[c][k];
        if (o < 0) continue;
        const int a = cells[c][k], b = cells[c][(k + 1) % 3], d = cells[c][(k + 2) % 3];
        int e = -1;
        for (int v : cells[o])
          if (v != b && v != d) e = v;
        if (incircle(pts[a], pts[b], pts[d], pts[e]) > 0) {
          cells[c] = {a, b, e};
          cells[o] = {a, e, d};
          changed = true;
        }
      }
  }
}

}  // namespace

DelaunayTriangulation delaunay(std::span<const Point2> input) {
  if (input.size() < 3) throw GeometryError("delaunay needs at least 3 points");
  for (const Point2& p : input) make_point(p.x, p.y);
  {
    std::vector<Point2> sorted(input.begin(), input.end());
    std::sort(sorted.begin(), sorted.end(),
              [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw GeometryError("delaunay: duplicate anchor points");
  }
  const std::vector<Point2> hull = convex_hull(input);  // rejects collinear input

  const int m = static_cast<int>(input.size());
  std::vector<Point2> pts(input.begin(), input.end());
  double xmin = pts[0].x, xmax = xmin, ymin = pts[0].y, ymax = ymin;
  for (const Point2& p : pts) {
    xmin = std::min(xmin, p.x), xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y), ymax = std::max(ymax, p.y);
  }
  const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
  const double s = 1e6 * std::max(xmax - xmin, ymax - ymin);
  pts.push_back({cx - 4 * s, cy - 2 * s});
  pts.push_back({cx + 4 * s, cy - 2 * s});
  pts.push_back({cx, cy + 4 * s});

  std::vector<Cell> tris{{m, m + 1, m + 2}};
  for (int i = 0; i < m; ++i) {
    const Point2 p = pts[i];
    std::vector<Cell> keep, bad;
    for (const Cell& t : tris)
      (incircle(pts[t[0]], pts[t[1]], pts[t[2]], p) > 0 ? bad : keep).push_back(t);
    std::set<Edge> edges;
    for (const Cell& t : bad)
      for (int k = 0; k < 3; ++k) edges.insert({t[k], t[(k + 1) % 3]});
    for (const Edge& e : edges) {
      if (edges.count({e.second, e.first})) continue;
      if (orient2d(pts[e.first], pts[e.second], p) <= 0)
        throw GeometryError("delaunay: cavity not star-shaped (internal error)");
      keep.push_back({e.first, e.second, i});
    }
    tris = std::move(keep);
  }

  std::vector<Cell> cells;
  for (const Cell& t : tris)
    if (t[0] < m && t[1] < m && t[2] < m) cells.push_back(t);
  pts.resize(m);

  const double hull_area = polygon_area(hull);
  auto area_of = [&](const std::vector<Cell>& cs) {
    double a = 0;
    for (const Cell& c : cs) a += signed_area(pts[c[0]], pts[c[1]], pts[c[2]]);
    return a;
  };
  if (cells.empty() || std::abs(area_of(cells) - hull_area) > 1e-9 * hull_area) {
    if (cells.empty()) throw GeometryError("delaunay: no interior cells (near-collinear input)");
    fill_pockets(pts, cells);
    lawson_flip(pts, cells);
    if (std::abs(area_of(cells) - hull_area) > 1e-9 * hull_area)
      throw GeometryError("delaunay: cells do not tile the convex hull");
  }

  DelaunayTriangulation out;
  out.points_ = std::move(pts);
  out.cells_ = std::move(cells);
  out.neighbors_ = build_neighbors(out.cells_);
  return out;
}

Triangle2 DelaunayTriangulation::triangle(std::size_t c) const {
  const Cell& t = cells_[c];
  return {points_[t[0]], points_[t[1]], points_[t[2]]};
}

std::optional<std::size_t> DelaunayTriangulation::locate(Point2 p, double tol) const {
  for (std::size_t c = 0; c < cells_.size(); ++c)
    if (contains(triangle(c), p, tol)) return c;
  return std::nullopt;
}

double DelaunayTriangulation::total_area() const {
  double a = 0;
  for (std::size_t c = 0; c < cells_.size(); ++c) a += triangle(c).area();
  return a;
}

bool DelaunayTriangulation::is_delaunay() const {
  for (const Cell& t : cells_)
    for (int q = 0; q < static_cast<int>(points_.size()); ++q) {
      if (q == t[0] || q == t[1] || q == t[2]) continue;
      if (incircle(points_[t[0]], points_[t[1]], points_[t[2]], points_[q]) > 0) return false;
    }
  return true;
}

}  // namespace pcd
