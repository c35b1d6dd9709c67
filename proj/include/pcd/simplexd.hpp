#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pcd/domination.hpp"

namespace pcd {

class Stream;

inline constexpr int kMaxSimplexDim = 4;

/// Barycentric coordinates in a d-simplex, 2 <= d <= 4 (d+1 entries).
class BaryD {
 public:
  explicit BaryD(int dim = 2);
  /// Validates size (3..5), finiteness and unit sum (1e-12).
  static BaryD make(std::span<const double> coords);
  static BaryD centroid(int dim);

  int dim() const { return dim_; }
  int size() const { return dim_ + 1; }
  double operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  double& operator[](int j) { return c_[static_cast<std::size_t>(j)]; }
  bool inside(double tol = 1e-12) const;

 private:
  int dim_;
  std::array<double, kMaxSimplexDim + 1> c_{};
};

/// A nondegenerate d-simplex in R^d.
class SimplexD {
 public:
  /// vertices: d+1 points of dimension d. Throws GeometryError if the volume
  /// is not positive beyond tolerance or the dimension is unsupported.
  explicit SimplexD(std::vector<Eigen::VectorXd> vertices);
  /// Regular-enough reference simplex: origin plus the unit basis vectors.
  static SimplexD standard(int dim);

  int dim() const { return dim_; }
  double volume() const;
  Eigen::VectorXd to_cartesian(const BaryD& b) const;
  BaryD to_barycentric(const Eigen::VectorXd& p) const;

 private:
  int dim_;
  std::vector<Eigen::VectorXd> v_;
  Eigen::MatrixXd edges_;  // columns v_k - v_0
};

/// Uniform point via normalized exponential spacings.
BaryD sample_uniform_simplex(int dim, Stream& rng);

/// Arc x -> z with M at the centroid: j = argmax of x (ties to the smallest
/// index), arc iff 1 - z_j <= r (1 - x_j). Infinite r gives every arc.
bool arc_predicate_d(const Factor& r, const BaryD& x, const BaryD& z);

Adjacency build_arcs_d(const Factor& r, std::span<const BaryD> points);

/// Exact domination number over the d+1 region candidates. Throws on empty input.
DominationResult domination_exact_d(const Factor& r, std::span<const BaryD> points);

}  // namespace pcd
