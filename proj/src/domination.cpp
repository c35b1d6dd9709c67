#include "pcd/domination.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace pcd {

PcdInstance::PcdInstance(Triangle2 triangle, ProximityParams params, std::vector<Point2> points)
    : triangle_(triangle), params_(params), points_(std::move(points)) {
  bary_.reserve(points_.size());
  for (const Point2& p : points_) {
    make_point(p.x, p.y);
    const Bary3 b = barycentric(triangle_, p);
    if (!b.inside(kBaryTol)) throw GeometryError("data point outside the triangle");
    bary_.push_back(b);
  }
}

Adjacency build_arcs(const ProximityParams& params, std::span<const Bary3> points) {
  Adjacency arcs(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      if (i != j && arc_predicate(params, points[i], points[j])) arcs[i].push_back(j);
  return arcs;
}

std::size_t arc_count(const Adjacency& arcs) {
  std::size_t m = 0;
  for (const auto& row : arcs) m += row.size();
  return m;
}

namespace {

// Calls visit(combo) for each k-subset of {0..n-1} in lexicographic order
// until visit returns true. Returns whether any call returned true.
bool for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return false;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (visit(c)) return true;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

DominationResult domination_exact(const ProximityParams& params, std::span<const Bary3> points) {
  if (points.empty()) throw std::invalid_argument("domination of an empty point set");

  // Within one vertex region the proximity regions are nested by the own
  // coordinate, so the region minimum dominates whatever its peers dominate.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::array<std::size_t, 3> best{kNone, kNone, kNone};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto j = static_cast<std::size_t>(vertex_region_of(params.m, points[i]));
    if (best[j] == kNone || points[i][static_cast<int>(j)] < points[best[j]][static_cast<int>(j)]) best[j] = i;
  }
  std::vector<std::size_t> cands;
  for (std::size_t c : best)
    if (c != kNone) cands.push_back(c);
  std::sort(cands.begin(), cands.end());

  DominationResult out;
  for (std::size_t k = 1; k <= cands.size(); ++k) {
    const bool found = for_each_combination(cands.size(), k, [&](const std::vector<std::size_t>& combo) {
      for (std::size_t z = 0; z < points.size(); ++z) {
        bool covered = false;
        for (std::size_t t : combo) {
          const std::size_t c = cands[t];
          if (c == z || arc_predicate(params, points[c], points[z])) {
            covered = true;
            break;
          }
        }
        if (!covered) return false;
      }
      out.gamma = static_cast<int>(k);
      for (std::size_t t : combo) out.witness.push_back(cands[t]);
      return true;
    });
    if (found) return out;
  }
  throw std::logic_error("candidate set failed to dominate");  // unreachable
}

DominationResult domination_bruteforce(const Adjacency& arcs) {
  const std::size_t n = arcs.size();
  if (n == 0) throw std::invalid_argument("domination of an empty point set");
  if (n > kBruteForceLimit) throw std::invalid_argument("brute-force domination limited to 25 points");
  std::vector<std::uint32_t> closed(n);
  for (std::size_t i = 0; i < n; ++i) {
    closed[i] = 1u << i;
    for (std::size_t j : arcs[i]) closed[i] |= 1u << j;
  }
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1u);
  DominationResult out;
  for (std::size_t k = 1; k <= n; ++k) {
    const bool found = for_each_combination(n, k, [&](const std::vector<std::size_t>& combo) {
      std::uint32_t u = 0;
      for (std::size_t i : combo) u |= closed[i];
      if (u != full) return false;
      out.gamma = static_cast<int>(k);
      out.witness = combo;
      return true;
    });
    if (found) return out;
  }
  throw std::logic_error("vertex set failed to dominate");  // unreachable
}

bool dominates(const Adjacency& arcs, std::span<const std::size_t> witness) {
  std::vector<bool> hit(arcs.size(), false);
  for (std::size_t w : witness) {
    if (w >= arcs.size()) return false;
    hit[w] = true;
    for (std::size_t j : arcs[w]) hit[j] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

MultiTriangleResult domination_multi(const DelaunayTriangulation& dt, std::span<const Point2> data,
                                     const ProximityParams& params) {
  MultiTriangleResult out;
  out.cell_count = dt.size();
  std::vector<std::vector<std::size_t>> members(dt.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (const auto cell = dt.locate(data[i], kBaryTol)) {
      members[*cell].push_back(i);
      ++out.kept;
    } else {
      ++out.discarded;
    }
  }
  for (std::size_t c = 0; c < dt.size(); ++c) {
    if (members[c].empty()) continue;
    const Triangle2 tri = dt.triangle(c);
    std::vector<Bary3> bary;
    bary.reserve(members[c].size());
    for (std::size_t i : members[c]) bary.push_back(barycentric(tri, data[i]));
    CellResult cr{c, members[c], domination_exact(params, bary)};
    for (std::size_t& w : cr.result.witness) w = members[c][w];
    out.total_gamma += cr.result.gamma;
    out.cells.push_back(std::move(cr));
  }
  return out;
}

MultiTriangleResult domination_multi(std::span<const Point2> anchors, std::span<const Point2> data,
                                     const ProximityParams& params) {
  return domination_multi(delaunay(anchors), data, params);
}

}  // namespace pcd
