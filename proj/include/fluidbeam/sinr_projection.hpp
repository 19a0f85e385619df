/**
 * @file sinr_projection.hpp
 * @brief Per-user projection of an auxiliary-variable row onto the SINR
 * feasible set, solved through Lagrangian duality with a bisection search on
 * the dual variable.
 */
#ifndef FLUIDBEAM_SINR_PROJECTION_HPP
#define FLUIDBEAM_SINR_PROJECTION_HPP

#include "fluidbeam/types.hpp"

namespace fluidbeam {

struct ProjectionResult {
  CVector row;                    // projected t_{k,.}, length K
  double lambda = 0.0;            // optimal dual variable, in [0, 1)
  bool met_with_equality = false; // true when lambda > 0 (constraint active)
  bool perturbed = false;         // degenerate zero diagonal entry was nudged
};

/**
 * Dual residual F(lambda) whose unique root in [0,1) gives the optimal
 * multiplier:
 *   F = |t_kk|^2/(1-l)^2 - gamma sum_{q!=k} |t_kq|^2/(1+l gamma)^2 - gamma sigma^2.
 * F(0) >= 0 exactly when t_bar already satisfies the SINR constraint.
 */
double dual_residual(double lambda, const CVector& t_bar, Eigen::Index k,
                     double gamma_k, double noise_power);

/**
 * Projects t_bar onto {t : |t_k|^2 >= gamma_k (sum_{q!=k} |t_q|^2 + sigma^2)}
 * minimizing sum_q |t_bar_q - t_q|^2. Feasible inputs pass through unchanged
 * with lambda = 0; otherwise the scaling of the paper's stationarity
 * conditions is applied at the bisection root. A zero diagonal entry on an
 * infeasible row has no dual root; it is perturbed to magnitude
 * 1e-6 sqrt(gamma sigma^2) (zero phase) and flagged in the result.
 */
ProjectionResult project_aux(const CVector& t_bar, Eigen::Index k, double gamma_k,
                             double noise_power, double tol);

}  // namespace fluidbeam

#endif  // FLUIDBEAM_SINR_PROJECTION_HPP
