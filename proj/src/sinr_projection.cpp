/**
 * @file sinr_projection.cpp
 */
#include "fluidbeam/sinr_projection.hpp"

namespace fluidbeam {

namespace {
constexpr double kBracketEps = 1e-12;
constexpr double kWidthTol = 1e-12;
constexpr double kDegenerateScale = 1e-6;

void check_args(const CVector& t_bar, Eigen::Index k, double gamma_k, double noise_power) {
  if (k < 0 || k >= t_bar.size())
    throw std::invalid_argument("sinr_projection: user index out of range");
  if (!(gamma_k > 0.0)) throw std::invalid_argument("sinr_projection: gamma must be > 0");
  if (!(noise_power > 0.0)) throw std::invalid_argument("sinr_projection: noise power must be > 0");
}

double interference_power(const CVector& t, Eigen::Index k) {
  double s = 0.0;
  for (Eigen::Index q = 0; q < t.size(); ++q)
    if (q != k) s += std::norm(t(q));
  return s;
}
}  // namespace

double dual_residual(double lambda, const CVector& t_bar, Eigen::Index k,
                     double gamma_k, double noise_power) {
  check_args(t_bar, k, gamma_k, noise_power);
  if (lambda < 0.0 || lambda >= 1.0)
    throw std::invalid_argument("dual_residual: lambda must lie in [0, 1)");
  const double own = std::norm(t_bar(k)) / ((1.0 - lambda) * (1.0 - lambda));
  double cross = 0.0;
  const double g1 = 1.0 + lambda * gamma_k;
  for (Eigen::Index q = 0; q < t_bar.size(); ++q)
    if (q != k) cross += std::norm(t_bar(q)) / (g1 * g1);
  return own - gamma_k * cross - gamma_k * noise_power;
}

ProjectionResult project_aux(const CVector& t_bar, Eigen::Index k, double gamma_k,
                             double noise_power, double tol) {
  check_args(t_bar, k, gamma_k, noise_power);
  if (!(tol > 0.0)) throw std::invalid_argument("project_aux: tol must be > 0");

  ProjectionResult res;
  res.row = t_bar;
  const double interf = interference_power(t_bar, k);
  if (std::norm(t_bar(k)) >= gamma_k * (interf + noise_power)) {
    return res;  // already feasible, lambda = 0, row unchanged
  }

  if (t_bar(k) == Complex(0.0, 0.0)) {
    // F's first term vanishes for every lambda < 1: no root. Nudge the
    // diagonal so the dual search is well posed and report the event.
    res.row(k) = Complex(kDegenerateScale * std::sqrt(gamma_k * noise_power), 0.0);
    res.perturbed = true;
  }

  const double f_tol = tol * gamma_k * noise_power;
  double lo = 0.0;
  double hi = 1.0 - kBracketEps;
  // F has a pole at 1; walk the bracket end toward it until the sign flips.
  while (dual_residual(hi, res.row, k, gamma_k, noise_power) < 0.0 && 1.0 - hi > 1e-15)
    hi = 1.0 - 0.1 * (1.0 - hi);

  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double f = dual_residual(mid, res.row, k, gamma_k, noise_power);
    if (hi - lo <= kWidthTol && std::abs(f) <= f_tol) break;
    if (f < 0.0)
      lo = mid;
    else
      hi = mid;
  }

  res.lambda = mid;
  res.met_with_equality = true;
  const double shrink = 1.0 + mid * gamma_k;
  for (Eigen::Index q = 0; q < res.row.size(); ++q)
    res.row(q) = (q == k) ? res.row(q) / (1.0 - mid) : res.row(q) / shrink;
  return res;
}

}  // namespace fluidbeam
