/**
 * @file position_optimizer.hpp
 * @brief Per-user antenna position update: the cosine-expansion objective
 * g(u), its analytic gradient and Hessian, the position-independent curvature
 * bound delta, and the projected SCA descent over the rectangular region.
 */
#ifndef FLUIDBEAM_POSITION_OPTIMIZER_HPP
#define FLUIDBEAM_POSITION_OPTIMIZER_HPP

#include "fluidbeam/types.hpp"

namespace fluidbeam {

/**
 * Frozen per-user data for the position subproblem
 *   g(u) = sum_q |h(u)^H w_q - t_q|^2.
 * B = Sigma G couples receive paths to BS antennas; d[q] = conj(B) w_q and
 * C[q] = d[q] d[q]^H carry the precoder dependence; direction factors of the
 * receive angles are cached for the trigonometric sums.
 */
struct PositionObjectiveContext {
  CMatrix B;                 // L_r x N
  std::vector<CMatrix> C;    // K matrices, L_r x L_r, Hermitian PSD
  std::vector<CVector> d;    // K vectors, length L_r
  CVector t_row;             // length K
  std::vector<PathAngles> receive_angles;
  double wavelength = 1.0;

  Eigen::VectorXd dir_x;     // sin(theta) cos(phi) per receive path
  Eigen::VectorXd dir_y;     // cos(theta) per receive path

  Eigen::Index num_paths() const { return B.rows(); }
  Eigen::Index num_users() const { return t_row.size(); }
};

/// Builds the context from B = Sigma G, the precoders and one auxiliary row.
PositionObjectiveContext make_position_context(const CMatrix& B, const BeamformingMatrix& W,
                                               const CVector& t_row,
                                               const std::vector<PathAngles>& receive_angles,
                                               double wavelength);

struct ScaSettings {
  int max_iters = 100;
  double rel_tol = 1e-5;
  Region region;
};

/// Expanded objective; equals sum_q |h(u)^H w_q - t_q|^2.
double objective_g(Position u, const PositionObjectiveContext& ctx);

/// Analytic gradient (dg/dx, dg/dy) of the cosine expansion.
Eigen::Vector2d gradient_g(Position u, const PositionObjectiveContext& ctx);

/// Analytic 2x2 Hessian of g; symmetric.
Eigen::Matrix2d hessian_g(Position u, const PositionObjectiveContext& ctx);

/// Position-independent curvature bound with delta I >= hessian_g(u) for all u.
double delta_k(const PositionObjectiveContext& ctx);

/**
 * Projected SCA descent: u <- clamp(u - grad g / delta). The isotropic
 * surrogate makes coordinate-wise clamping the exact minimizer of each
 * surrogate subproblem, so g is non-increasing along the iterates. Stops on
 * relative decrease <= rel_tol or max_iters.
 */
Position sca_optimize_position(Position u0, const PositionObjectiveContext& ctx,
                               const ScaSettings& settings);

}  // namespace fluidbeam

#endif  // FLUIDBEAM_POSITION_OPTIMIZER_HPP
