/**
 * @file ao_engine.cpp
 */
#include "fluidbeam/ao_engine.hpp"

#include "fluidbeam/beamforming_solver.hpp"
#include "fluidbeam/channel_model.hpp"
#include "fluidbeam/position_optimizer.hpp"
#include "fluidbeam/sinr_projection.hpp"

namespace fluidbeam {

namespace {

constexpr double kProjectionTol = 1e-9;

// Per-user state in noise-normalized units (unit noise power).
struct NormalizedProblem {
  std::vector<CMatrix> B;          // Sigma_k G_k / sigma, L_r x N
  std::vector<CVector> channels;   // h_k(u_k) / sigma
  std::vector<Position> positions;
  std::vector<double> gammas;
  double sigma2 = 0.0;

  const Scenario* scenario = nullptr;

  void refresh_channel(std::size_t k) {
    const PathGeometry& geom = scenario->users[k];
    const CVector f = receive_frv(positions[k], geom);
    channels[k] = (f.adjoint() * B[k]).transpose();
  }
};

NormalizedProblem build_normalized(const Scenario& scenario,
                                   const std::vector<Position>& positions) {
  NormalizedProblem p;
  p.scenario = &scenario;
  p.sigma2 = scenario.noise_power;
  p.gammas = scenario.sinr_targets;
  p.positions = positions;
  const double inv_sigma = 1.0 / std::sqrt(p.sigma2);
  const std::size_t k_users = scenario.users.size();
  p.B.reserve(k_users);
  p.channels.resize(k_users);
  for (std::size_t k = 0; k < k_users; ++k) {
    const PathGeometry& geom = scenario.users[k];
    p.B.push_back(inv_sigma * (geom.prm * transmit_frm(scenario.fpa_positions, geom)));
    p.refresh_channel(k);
  }
  return p;
}

double normalized_penalty(const NormalizedProblem& p, const BeamformingMatrix& W,
                          const AuxMatrix& T) {
  double pen = 0.0;
  for (std::size_t k = 0; k < p.channels.size(); ++k) {
    const CVector resid =
        (p.channels[k].adjoint() * W).transpose() - T.row(static_cast<Eigen::Index>(k)).transpose();
    pen += resid.squaredNorm();
  }
  return pen;
}

double normalized_xi(const NormalizedProblem& p, const BeamformingMatrix& W,
                     const AuxMatrix& T) {
  double xi = 0.0;
  for (std::size_t k = 0; k < p.channels.size(); ++k) {
    const CVector resid =
        (p.channels[k].adjoint() * W).transpose() - T.row(static_cast<Eigen::Index>(k)).transpose();
    xi = std::max(xi, resid.cwiseAbs2().maxCoeff());
  }
  return xi;
}

bool sinr_targets_met(const NormalizedProblem& p, const BeamformingMatrix& W, double tol) {
  for (std::size_t k = 0; k < p.channels.size(); ++k) {
    const double s = sinr(p.channels, W, 1.0, static_cast<Eigen::Index>(k));
    if (s < p.gammas[k] * (1.0 - tol)) return false;
  }
  return true;
}

}  // namespace

void PenaltySettings::validate() const {
  if (!(rho0 > 0.0)) throw std::invalid_argument("PenaltySettings: rho0 must be > 0");
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("PenaltySettings: c must lie in (0,1)");
  if (!(eps_inner > 0.0) || !(eps_outer > 0.0))
    throw std::invalid_argument("PenaltySettings: tolerances must be > 0");
  if (max_inner < 1 || max_outer < 1)
    throw std::invalid_argument("PenaltySettings: iteration caps must be >= 1");
}

double penalized_objective(const BeamformingMatrix& W, const AuxMatrix& T,
                           const std::vector<Position>& positions,
                           const Scenario& scenario, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("penalized_objective: rho must be > 0");
  double obj = W.squaredNorm();
  for (std::size_t k = 0; k < scenario.users.size(); ++k) {
    const CVector h = channel_vector(positions[k], scenario.users[k], scenario.fpa_positions);
    const CVector resid =
        (h.adjoint() * W).transpose() - T.row(static_cast<Eigen::Index>(k)).transpose();
    obj += resid.squaredNorm() / (2.0 * rho);
  }
  return obj;
}

double violation_xi(const BeamformingMatrix& W, const AuxMatrix& T,
                    const std::vector<Position>& positions, const Scenario& scenario) {
  double xi = 0.0;
  for (std::size_t k = 0; k < scenario.users.size(); ++k) {
    const CVector h = channel_vector(positions[k], scenario.users[k], scenario.fpa_positions);
    const CVector resid =
        (h.adjoint() * W).transpose() - T.row(static_cast<Eigen::Index>(k)).transpose();
    xi = std::max(xi, resid.cwiseAbs2().maxCoeff());
  }
  return xi;
}

BeamformingMatrix mrt_scaled_init(const std::vector<CVector>& channels,
                                  const std::vector<double>& sinr_targets,
                                  double noise_power) {
  const Eigen::Index k_users = static_cast<Eigen::Index>(channels.size());
  const Eigen::Index n = channels.front().size();
  BeamformingMatrix dirs(n, k_users);
  for (Eigen::Index k = 0; k < k_users; ++k) {
    const CVector& h = channels[static_cast<std::size_t>(k)];
    const double norm = h.norm();
    if (norm > 0.0)
      dirs.col(k) = h / norm;
    else
      dirs.col(k) = CVector::Unit(n, 0);
  }

  Eigen::MatrixXd gains(k_users, k_users);  // |h_k^H dir_q|^2
  for (Eigen::Index k = 0; k < k_users; ++k)
    for (Eigen::Index q = 0; q < k_users; ++q)
      gains(k, q) = std::norm(Complex(channels[static_cast<std::size_t>(k)].adjoint() * dirs.col(q)));

  // Smallest common scale meeting every target; the per-user requirement is
  // linear in the squared scale once interference is expressed through it.
  double s2 = 0.0;
  bool feasible = true;
  for (Eigen::Index k = 0; k < k_users; ++k) {
    const double gamma = sinr_targets[static_cast<std::size_t>(k)];
    double interf = 0.0;
    for (Eigen::Index q = 0; q < k_users; ++q)
      if (q != k) interf += gains(k, q);
    const double margin = gains(k, k) - gamma * interf;
    if (margin <= 0.0) {
      feasible = false;
      break;
    }
    s2 = std::max(s2, gamma * noise_power / margin);
  }
  if (!feasible) {
    // No common scale meets the targets with these directions; fall back to
    // twice the interference-free requirement so the start stays bounded.
    s2 = 0.0;
    for (Eigen::Index k = 0; k < k_users; ++k) {
      const double gamma = sinr_targets[static_cast<std::size_t>(k)];
      s2 = std::max(s2, 2.0 * gamma * noise_power / gains(k, k));
    }
  }
  return std::sqrt(s2) * dirs;
}

SolveResult solve(const Scenario& scenario, const PenaltySettings& settings,
                  const SolveInit& init) {
  scenario.validate();
  settings.validate();
  const std::size_t k_users = scenario.users.size();
  if (k_users == 0) throw std::invalid_argument("solve: scenario has no users");

  std::vector<Position> positions;
  if (init.positions) {
    positions = *init.positions;
    if (positions.size() != k_users)
      throw std::invalid_argument("solve: init position count mismatch");
    for (std::size_t k = 0; k < k_users; ++k)
      if (!scenario.users[k].region.contains(positions[k]))
        throw std::invalid_argument("solve: init position outside region");
  } else {
    positions.reserve(k_users);
    for (const auto& u : scenario.users) positions.push_back(u.region.clamp({0.0, 0.0}));
  }

  NormalizedProblem prob = build_normalized(scenario, positions);

  BeamformingMatrix W;
  if (init.W) {
    W = *init.W;
    if (W.rows() != scenario.num_antennas() || W.cols() != static_cast<Eigen::Index>(k_users))
      throw std::invalid_argument("solve: init W has wrong dimensions");
  } else {
    W = mrt_scaled_init(prob.channels, prob.gammas, 1.0);
  }

  SolveResult result;

  // T start: the projected targets themselves. When the starting W already
  // meets every SINR constraint this is exactly h_k^H w_q; otherwise the
  // projection keeps every later auxiliary update a descent step.
  AuxMatrix T(k_users, k_users);
  for (std::size_t k = 0; k < k_users; ++k) {
    const CVector t_bar = (prob.channels[k].adjoint() * W).transpose();
    ProjectionResult pr = project_aux(t_bar, static_cast<Eigen::Index>(k), prob.gammas[k], 1.0,
                                      kProjectionTol);
    if (pr.perturbed) ++result.projection_perturbations;
    T.row(static_cast<Eigen::Index>(k)) = pr.row.transpose();
  }

  double rho = settings.rho0;
  std::vector<double> xi_history;
  bool converged = false;
  int outer = 0;

  for (outer = 1; outer <= settings.max_outer; ++outer) {
    double obj_prev = W.squaredNorm() + normalized_penalty(prob, W, T) / (2.0 * rho);
    for (int inner = 1; inner <= settings.max_inner; ++inner) {
      W = solve_beamforming(prob.channels, T, rho);

      for (std::size_t k = 0; k < k_users; ++k) {
        const CVector t_bar = (prob.channels[k].adjoint() * W).transpose();
        ProjectionResult pr = project_aux(t_bar, static_cast<Eigen::Index>(k), prob.gammas[k],
                                          1.0, kProjectionTol);
        if (pr.perturbed) ++result.projection_perturbations;
        T.row(static_cast<Eigen::Index>(k)) = pr.row.transpose();
      }

      for (std::size_t k = 0; k < k_users; ++k) {
        const PathGeometry& geom = scenario.users[k];
        if (geom.region.is_point()) continue;
        PositionObjectiveContext ctx = make_position_context(
            prob.B[k], W, T.row(static_cast<Eigen::Index>(k)).transpose(), geom.receive_angles,
            geom.wavelength);
        ScaSettings sca{settings.sca_max_iters, settings.sca_rel_tol, geom.region};
        prob.positions[k] = sca_optimize_position(prob.positions[k], ctx, sca);
        prob.refresh_channel(k);
      }

      const double obj = W.squaredNorm() + normalized_penalty(prob, W, T) / (2.0 * rho);
      result.trace.push_back(
          {outer, inner, obj, prob.sigma2 * normalized_xi(prob, W, T)});
      ++result.iters_inner_total;
      if (obj_prev - obj <= settings.eps_inner * obj_prev) break;
      obj_prev = obj;
    }

    const double xi = normalized_xi(prob, W, T);
    if (xi <= settings.eps_outer && sinr_targets_met(prob, W, settings.sinr_feas_tol)) {
      converged = true;
      break;
    }
    xi_history.push_back(xi);
    const int win = settings.stall_window;
    if (static_cast<int>(xi_history.size()) > win) {
      const double past = xi_history[xi_history.size() - 1 - static_cast<std::size_t>(win)];
      if (past - xi < settings.stall_frac * past) break;  // stalled, give up
    }
    rho *= settings.c;
  }

  result.W = W;
  result.positions = prob.positions;
  result.total_power = W.squaredNorm();
  result.per_user_sinr.resize(k_users);
  for (std::size_t k = 0; k < k_users; ++k)
    result.per_user_sinr[k] = sinr(prob.channels, W, 1.0, static_cast<Eigen::Index>(k));
  result.xi = prob.sigma2 * normalized_xi(prob, W, T);
  result.converged = converged;
  result.iters_outer = std::min(outer, settings.max_outer);
  return result;
}

}  // namespace fluidbeam
