#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcd/proximity.hpp"
#include "pcd/quadrature.hpp"

namespace pcd {

/// Numeric failure (quadrature did not reach the requested tolerance).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrValue {
  double value = 0.0;
  double error = 0.0;  // quadrature error estimate
};

/// Limiting probability that the domination number equals 2 when M is a
/// vertex of T_r. For r < 3/2 this is
///   4 * int_0^inf int_0^inf u v exp(-(u^2 + v^2 + 2 r (r-1) u v)) du dv,
/// the vertex integrand after rescaling w = u sqrt(3(r-1)/(4r)).
/// At r = 3/2 the three candidate points collapse onto the centroid and a
/// separate three-extremum integral applies (see docs/math-notes.md).
/// Throws std::invalid_argument outside (1, 3/2], NumericError on failure.
PrValue p_r(double r, double abs_tol = 1e-6);

/// The r < 3/2 vertex integral evaluated at any r in (1, 3/2]; exposed so
/// callers can inspect the branch that p_r(3/2) does not use.
PrValue p_r_vertex_integral(double r, double abs_tol = 1e-6);
/// The r = 3/2 centroid integral.
PrValue p_centroid_three_halves(double abs_tol = 1e-6);
/// E[exp(-9/2 t S)] for S with density 6 s exp(-3 s^2); closed form via erfc.
double centroid_collapse_laplace(double t);

struct GammaLaw {
  enum class Kind { Degenerate, TwoPlusBernoulli };
  Kind kind = Kind::Degenerate;
  int point = 1;     // support point of the degenerate variant
  double q = 0.0;    // success probability of the Bernoulli part (= 1 - p_r)
  double p = 0.0;    // p_r for the Bernoulli variant
  std::string note;  // which regime produced the law

  std::string name() const;
  /// P(gamma = k) for k = 1, 2, 3.
  double pmf(int k) const;
};

/// Asymptotic law of the domination number given r and the placement of M
/// against T_r. r may be infinite.
GammaLaw asymptotic_law(const Factor& r, MPlacement placement, double abs_tol = 1e-6);
/// Same, classifying M with classify_M (tolerance 1e-9).
GammaLaw asymptotic_law(const Factor& r, const Bary3& m, double abs_tol = 1e-6);

/// (mean, variance).
std::pair<double, double> law_moments(const GammaLaw& law);

struct MultiGammaLaw {
  enum class Kind { Degenerate, ShiftedBinomial };
  Kind kind = Kind::Degenerate;
  int cells = 1;
  int point = 1;   // degenerate support point
  double q = 0.0;  // binomial success probability

  std::string name() const;
  /// Support and probabilities.
  std::vector<std::pair<int, double>> pmf() const;
  std::pair<double, double> moments() const;
};

/// Lift of a single-triangle law to J_m independent cells. Throws for cells < 1.
MultiGammaLaw multi_law(const GammaLaw& single, int cells);

}  // namespace pcd
