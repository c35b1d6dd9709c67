#include "pcd/simplexd.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pcd/rng.hpp"

namespace pcd {

BaryD::BaryD(int dim) : dim_(dim) {
  if (dim < 2 || dim > kMaxSimplexDim) throw std::invalid_argument("simplex dimension must be in [2, 4]");
  for (int j = 0; j <= dim; ++j) c_[static_cast<std::size_t>(j)] = 1.0 / (dim + 1);
}

BaryD BaryD::make(std::span<const double> coords) {
  BaryD out(static_cast<int>(coords.size()) - 1);
  double sum = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (!std::isfinite(coords[j])) throw GeometryError("non-finite barycentric coordinate");
    out.c_[j] = coords[j];
    sum += coords[j];
  }
  if (std::abs(sum - 1.0) > 1e-12) throw GeometryError("barycentric coordinates must sum to 1");
  return out;
}

BaryD BaryD::centroid(int dim) { return BaryD(dim); }

bool BaryD::inside(double tol) const {
  for (int j = 0; j <= dim_; ++j)
    if ((*this)[j] < -tol) return false;
  return true;
}

SimplexD::SimplexD(std::vector<Eigen::VectorXd> vertices) : v_(std::move(vertices)) {
  dim_ = static_cast<int>(v_.size()) - 1;
  if (dim_ < 2 || dim_ > kMaxSimplexDim) throw GeometryError("simplex dimension must be in [2, 4]");
  edges_.resize(dim_, dim_);
  double scale = 0;
  for (int k = 0; k <= dim_; ++k) {
    if (v_[static_cast<std::size_t>(k)].size() != dim_) throw GeometryError("simplex vertex has wrong dimension");
    if (k > 0) {
      edges_.col(k - 1) = v_[static_cast<std::size_t>(k)] - v_[0];
      scale = std::max(scale, edges_.col(k - 1).norm());
    }
  }
  if (!(std::abs(edges_.determinant()) > 1e-14 * std::pow(scale, dim_)))
    throw GeometryError("degenerate simplex");
}

SimplexD SimplexD::standard(int dim) {
  std::vector<Eigen::VectorXd> v(static_cast<std::size_t>(dim + 1), Eigen::VectorXd::Zero(dim));
  for (int k = 1; k <= dim; ++k) v[static_cast<std::size_t>(k)](k - 1) = 1.0;
  return SimplexD(std::move(v));
}

double SimplexD::volume() const {
  return std::abs(edges_.determinant()) / std::tgamma(dim_ + 1.0);
}

Eigen::VectorXd SimplexD::to_cartesian(const BaryD& b) const {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(dim_);
  for (int k = 0; k <= dim_; ++k) p += b[k] * v_[static_cast<std::size_t>(k)];
  return p;
}

BaryD SimplexD::to_barycentric(const Eigen::VectorXd& p) const {
  const Eigen::VectorXd tail = edges_.partialPivLu().solve(p - v_[0]);
  BaryD out(dim_);
  out[0] = 1.0 - tail.sum();
  for (int k = 1; k <= dim_; ++k) out[k] = tail(k - 1);
  return out;
}

BaryD sample_uniform_simplex(int dim, Stream& rng) {
  BaryD out(dim);
  double total = 0;
  for (int j = 0; j <= dim; ++j) total += (out[j] = rng.exponential());
  for (int j = 0; j <= dim; ++j) out[j] /= total;
  return out;
}

namespace {

int argmax_region(const BaryD& x) {
  int j = 0;
  for (int k = 1; k < x.size(); ++k)
    if (x[k] > x[j]) j = k;
  return j;
}

}  // namespace

bool arc_predicate_d(const Factor& r, const BaryD& x, const BaryD& z) {
  if (r.is_infinite()) return true;
  const int j = argmax_region(x);
  return 1.0 - z[j] <= r.value() * (1.0 - x[j]) + kBaryTol;
}

Adjacency build_arcs_d(const Factor& r, std::span<const BaryD> points) {
  Adjacency arcs(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      if (i != j && arc_predicate_d(r, points[i], points[j])) arcs[i].push_back(j);
  return arcs;
}

DominationResult domination_exact_d(const Factor& r, std::span<const BaryD> points) {
  if (points.empty()) throw std::invalid_argument("domination of an empty point set");
  const int d1 = points[0].size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::array<std::size_t, kMaxSimplexDim + 1> best;
  best.fill(kNone);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int j = argmax_region(points[i]);
    auto& b = best[static_cast<std::size_t>(j)];
    if (b == kNone || points[i][j] < points[b][j]) b = i;
  }
  std::vector<std::size_t> cands;
  for (int j = 0; j < d1; ++j)
    if (best[static_cast<std::size_t>(j)] != kNone) cands.push_back(best[static_cast<std::size_t>(j)]);
  std::sort(cands.begin(), cands.end());

  // Subsets of candidates by bitmask, in increasing size and then
  // lexicographic order of the selected candidate positions.
  const std::size_t m = cands.size();
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << m); ++mask)
      if (static_cast<std::size_t>(std::popcount(mask)) == k) masks.push_back(mask);
    auto lex_key = [&](unsigned mask) {
      std::vector<std::size_t> v;
      for (std::size_t t = 0; t < m; ++t)
        if (mask & (1u << t)) v.push_back(t);
      return v;
    };
    std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) { return lex_key(a) < lex_key(b); });
    for (unsigned mask : masks) {
      bool all = true;
      for (std::size_t z = 0; z < points.size() && all; ++z) {
        bool covered = false;
        for (std::size_t t = 0; t < m && !covered; ++t)
          if (mask & (1u << t))
            covered = cands[t] == z || arc_predicate_d(r, points[cands[t]], points[z]);
        all = covered;
      }
      if (all) {
        DominationResult out;
        out.gamma = static_cast<int>(k);
        for (std::size_t t = 0; t < m; ++t)
          if (mask & (1u << t)) out.witness.push_back(cands[t]);
        return out;
      }
    }
  }
  throw std::logic_error("candidate set failed to dominate");  // unreachable
}

}  // namespace pcd
