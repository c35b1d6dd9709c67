#include "pcd/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pcd {
namespace {

constexpr double kCollapseRate = 4.5;  // 9/2: corner mass per unit s_i s_k

// Density of the scaled gap between a region candidate and the centroid.
double gap_density(double s) { return 6.0 * s * std::exp(-3.0 * s * s); }

}  // namespace

double centroid_collapse_laplace(double t) {
  // E[exp(-b S)] = 1 - sqrt(pi) x erfcx(x), x = b / (2 sqrt 3).
  const double x = kCollapseRate * t / (2.0 * std::sqrt(3.0));
  if (x <= 5.0) return 1.0 - std::sqrt(std::numbers::pi) * x * std::exp(x * x) * std::erfc(x);
  // Asymptotic series sum_{k>=1} (-1)^{k+1} (2k-1)!! / (2x^2)^k, truncated at
  // its smallest term.
  const double z = 1.0 / (2.0 * x * x);
  double term = z, sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    sum += term;
    const double next = -term * (2.0 * k + 1.0) * z;
    if (std::abs(next) >= std::abs(term) || std::abs(next) < 1e-18) break;
    term = next;
  }
  return sum;
}

PrValue p_r_vertex_integral(double r, double abs_tol) {
  if (!(r > 1.0 && r <= 1.5)) throw std::invalid_argument("p_r requires r in (1, 3/2]");
  const double rho = r * (r - 1.0);
  const auto res = quad::integrate_quadrant(
      [rho](double u, double v) { return 4.0 * u * v * std::exp(-(u * u + v * v + 2.0 * rho * u * v)); }, abs_tol);
  if (!res.converged) throw NumericError("p_r quadrature did not converge");
  return {res.value, res.error};
}

PrValue p_centroid_three_halves(double abs_tol) {
  // P(some pair of candidates covers) by inclusion-exclusion over the three
  // vertex corners: 3 E[e_12] - 3 E[e_12 e_23] + E[e_12 e_23 e_13].
  const auto pairs_and_triple = quad::integrate_quadrant(
      [](double s1, double s2) {
        return gap_density(s1) * gap_density(s2) * std::exp(-kCollapseRate * s1 * s2) *
               (3.0 + centroid_collapse_laplace(s1 + s2));
      },
      abs_tol / 2);
  const auto overlaps = quad::integrate_half_line(
      [](double s) {
        const double g = centroid_collapse_laplace(s);
        return gap_density(s) * g * g;
      },
      abs_tol / 6);
  if (!pairs_and_triple.converged || !overlaps.converged) throw NumericError("p_3/2 quadrature did not converge");
  return {pairs_and_triple.value - 3.0 * overlaps.value, pairs_and_triple.error + 3.0 * overlaps.error};
}

PrValue p_r(double r, double abs_tol) {
  if (!(r > 1.0 && r <= 1.5)) throw std::invalid_argument("p_r requires r in (1, 3/2]");
  if (!(abs_tol > 0.0)) throw std::invalid_argument("p_r tolerance must be positive");
  return r == 1.5 ? p_centroid_three_halves(abs_tol) : p_r_vertex_integral(r, abs_tol);
}

std::string GammaLaw::name() const {
  if (kind == Kind::Degenerate) return "Degenerate(" + std::to_string(point) + ")";
  return "TwoPlusBernoulli";
}

double GammaLaw::pmf(int k) const {
  if (kind == Kind::Degenerate) return k == point ? 1.0 : 0.0;
  if (k == 2) return 1.0 - q;
  if (k == 3) return q;
  return 0.0;
}

GammaLaw asymptotic_law(const Factor& r, MPlacement placement, double abs_tol) {
  GammaLaw law;
  if (r.is_infinite()) {
    law.note = "r = inf: proximity region is the whole triangle";
    return law;
  }
  const double rv = r.value();
  if (rv > 1.5) {
    law.note = "r > 3/2: T_r empty, M outside T_r";
    return law;
  }
  switch (placement) {
    case MPlacement::OutsideTr:
      law.note = "M outside T_r: superset region has positive area";
      return law;
    case MPlacement::InteriorTr:
    case MPlacement::BoundaryNonVertex:
      if (rv == 1.5) {
        law.note = "r = 3/2 and M off the degenerate T_r point";
        return law;
      }
      law.point = 3;
      law.note = placement == MPlacement::InteriorTr ? "M in the interior of T_r" : "M on the boundary of T_r, not a vertex";
      return law;
    case MPlacement::VertexOfTr: {
      if (rv == 1.0) {
        law.point = 3;
        law.note = "r = 1";
        return law;
      }
      const PrValue p = p_r(rv, abs_tol);
      law.kind = GammaLaw::Kind::TwoPlusBernoulli;
      law.p = p.value;
      law.q = 1.0 - p.value;
      law.point = 2;
      law.note = rv == 1.5 ? "r = 3/2 and M at the centroid-analog point" : "M at a vertex of T_r";
      return law;
    }
  }
  return law;
}

GammaLaw asymptotic_law(const Factor& r, const Bary3& m, double abs_tol) {
  if (r.is_infinite()) return asymptotic_law(r, MPlacement::OutsideTr, abs_tol);
  return asymptotic_law(r, classify_M(r.value(), m), abs_tol);
}

std::pair<double, double> law_moments(const GammaLaw& law) {
  if (law.kind == GammaLaw::Kind::Degenerate) return {static_cast<double>(law.point), 0.0};
  return {2.0 + law.q, law.q * (1.0 - law.q)};
}

std::string MultiGammaLaw::name() const {
  if (kind == Kind::Degenerate) return "Degenerate(" + std::to_string(point) + ")";
  return "ShiftedBinomial";
}

std::vector<std::pair<int, double>> MultiGammaLaw::pmf() const {
  if (kind == Kind::Degenerate) return {{point, 1.0}};
  std::vector<std::pair<int, double>> out;
  for (int k = 0; k <= cells; ++k) {
    const double logc = std::lgamma(cells + 1.0) - std::lgamma(k + 1.0) - std::lgamma(cells - k + 1.0);
    out.emplace_back(2 * cells + k, std::exp(logc + k * std::log(q) + (cells - k) * std::log1p(-q)));
  }
  return out;
}

std::pair<double, double> MultiGammaLaw::moments() const {
  if (kind == Kind::Degenerate) return {static_cast<double>(point), 0.0};
  return {2.0 * cells + cells * q, cells * q * (1.0 - q)};
}

MultiGammaLaw multi_law(const GammaLaw& single, int cells) {
  if (cells < 1) throw std::invalid_argument("multi_law needs at least one cell");
  MultiGammaLaw out;
  out.cells = cells;
  if (single.kind == GammaLaw::Kind::Degenerate) {
    out.point = single.point * cells;
    return out;
  }
  out.kind = MultiGammaLaw::Kind::ShiftedBinomial;
  out.q = single.q;
  out.point = 2 * cells;
  return out;
}

}  // namespace pcd
