/**
 * @file ao_engine.hpp
 * @brief Two-layer penalty solver: the inner loop alternates the beamforming,
 * auxiliary-projection and position subproblems on the penalized objective;
 * the outer loop shrinks the penalty factor until the equality-constraint
 * violation indicator and the SINR targets are met.
 */
#ifndef FLUIDBEAM_AO_ENGINE_HPP
#define FLUIDBEAM_AO_ENGINE_HPP

#include <optional>

#include "fluidbeam/types.hpp"

namespace fluidbeam {

/**
 * Penalty-loop controls. The solver runs in noise-normalized units (channels
 * scaled by 1/sigma, unit noise), which makes rho0 and eps_outer scale-free:
 * auxiliary variables then live on the order of the SINR targets regardless
 * of path loss. Penalty weights translate back to physical units as
 * rho_physical = rho * sigma^2.
 */
struct PenaltySettings {
  double rho0 = 1.0;          // initial penalty factor, noise-normalized
  double c = 0.9;             // multiplicative decrease per outer iteration
  double eps_inner = 1e-4;    // fractional objective decrease stop, inner loop
  double eps_outer = 1e-7;    // violation threshold on the normalized xi
  int max_inner = 50;
  int max_outer = 400;
  double sinr_feas_tol = 1e-4;  // accept SINR >= gamma (1 - tol)
  int sca_max_iters = 100;
  double sca_rel_tol = 1e-5;
  int stall_window = 10;      // outer iterations with < stall_frac xi decrease
  double stall_frac = 0.01;

  void validate() const;
};

struct TraceEntry {
  int outer = 0;
  int inner = 0;
  double objective = 0.0;  // penalized objective, physical units
  double xi = 0.0;         // violation indicator, physical units
};

struct SolveResult {
  BeamformingMatrix W;                // N x K
  std::vector<Position> positions;    // converged antenna positions
  double total_power = 0.0;           // sum_k ||w_k||^2, watts
  std::vector<double> per_user_sinr;  // linear
  double xi = 0.0;                    // final violation, physical units
  std::vector<TraceEntry> trace;
  bool converged = false;
  int iters_outer = 0;
  int iters_inner_total = 0;
  int projection_perturbations = 0;   // degenerate aux projections encountered
};

/// Optional warm start; defaults are region-clamped origin positions and a
/// common-scaled maximum-ratio beamformer.
struct SolveInit {
  std::optional<std::vector<Position>> positions;
  std::optional<BeamformingMatrix> W;
};

/// Penalized objective of (the relaxed problem): sum_k ||w_k||^2 +
/// (1/2rho) sum_{k,q} |h_k(u_k)^H w_q - t_{k,q}|^2, in physical units.
double penalized_objective(const BeamformingMatrix& W, const AuxMatrix& T,
                           const std::vector<Position>& positions,
                           const Scenario& scenario, double rho);

/// Violation indicator: max_{k,q} |h_k(u_k)^H w_q - t_{k,q}|^2.
double violation_xi(const BeamformingMatrix& W, const AuxMatrix& T,
                    const std::vector<Position>& positions, const Scenario& scenario);

/**
 * Maximum-ratio directions with a common power scale chosen so every SINR
 * target holds at the start whenever the directions allow it; otherwise a
 * bounded interference-free scale. This is the solver's default W start.
 */
BeamformingMatrix mrt_scaled_init(const std::vector<CVector>& channels,
                                  const std::vector<double>& sinr_targets,
                                  double noise_power);

/// Runs the full two-layer solve on one scenario.
SolveResult solve(const Scenario& scenario, const PenaltySettings& settings,
                  const SolveInit& init = {});

}  // namespace fluidbeam

#endif  // FLUIDBEAM_AO_ENGINE_HPP
