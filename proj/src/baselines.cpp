/**
 * @file baselines.cpp
 */
#include "fluidbeam/baselines.hpp"

#include "fluidbeam/beamforming_solver.hpp"
#include "fluidbeam/channel_model.hpp"
#include "fluidbeam/sinr_projection.hpp"

namespace fluidbeam {

namespace {

constexpr double kApsSpacing = 0.5;    // lambda/2 candidate lattice
constexpr double kMcpSpacing = 0.02;   // lambda/50 search grid
constexpr int kApsMaxCycles = 20;

Scenario with_point_regions(const Scenario& scenario, const std::vector<Position>& points) {
  Scenario out = scenario;
  for (std::size_t k = 0; k < out.users.size(); ++k)
    out.users[k].region = Region::single_point(points[k]);
  return out;
}

std::vector<double> axis_points(double lo, double hi, double spacing) {
  const int count = (hi > lo) ? static_cast<int>(std::floor((hi - lo) / spacing + 1e-9)) + 1 : 1;
  std::vector<double> xs(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) xs[static_cast<std::size_t>(i)] = lo + spacing * i;
  return xs;
}

std::vector<Position> candidate_lattice(const Region& region, double spacing) {
  std::vector<Position> out;
  for (double x : axis_points(region.x_min, region.x_max, spacing))
    for (double y : axis_points(region.y_min, region.y_max, spacing))
      out.push_back({x, y});
  return out;  // ascending (x, then y): ties resolve toward the lowest
}

}  // namespace

std::string to_string(SchemeId id) {
  switch (id) {
    case SchemeId::FA: return "FA";
    case SchemeId::FPA: return "FPA";
    case SchemeId::APS: return "APS";
    case SchemeId::MCP: return "MCP";
  }
  return "?";
}

SchemeId scheme_from_string(const std::string& name) {
  if (name == "FA") return SchemeId::FA;
  if (name == "FPA") return SchemeId::FPA;
  if (name == "APS") return SchemeId::APS;
  if (name == "MCP") return SchemeId::MCP;
  throw std::invalid_argument("unknown scheme '" + name + "' (expected FA, FPA, APS or MCP)");
}

SolveResult solve_fpa(const Scenario& scenario, const PenaltySettings& settings) {
  std::vector<Position> origins;
  origins.reserve(scenario.users.size());
  for (const auto& u : scenario.users) origins.push_back(u.region.clamp({0.0, 0.0}));
  return solve(with_point_regions(scenario, origins), settings);
}

Position max_channel_power_position(const PathGeometry& geom,
                                    const std::vector<Position>& fpa_positions, double spacing) {
  const CMatrix B = geom.prm * transmit_frm(fpa_positions, geom);
  const CMatrix Bc = B.conjugate();
  const CMatrix M = Bc * Bc.adjoint();  // channel power is fc^H M fc, fc = conj(f(u))

  Position best{geom.region.x_min, geom.region.y_min};
  double best_gain = -1.0;
  for (const Position& cand : candidate_lattice(geom.region, spacing)) {
    const CVector fc = receive_frv(cand, geom).conjugate();
    const double gain = std::real(Complex(fc.adjoint() * M * fc));
    if (gain > best_gain) {
      best_gain = gain;
      best = cand;
    }
  }
  return best;
}

SolveResult solve_mcp(const Scenario& scenario, const PenaltySettings& settings) {
  std::vector<Position> picks;
  picks.reserve(scenario.users.size());
  for (const auto& u : scenario.users)
    picks.push_back(max_channel_power_position(u, scenario.fpa_positions, kMcpSpacing));
  return solve(with_point_regions(scenario, picks), settings);
}

SolveResult solve_aps(const Scenario& scenario, const PenaltySettings& settings) {
  scenario.validate();
  settings.validate();
  const std::size_t k_users = scenario.users.size();
  const double sigma = std::sqrt(scenario.noise_power);

  std::vector<CMatrix> B_norm;
  std::vector<std::vector<Position>> lattices;
  B_norm.reserve(k_users);
  lattices.reserve(k_users);
  for (const auto& u : scenario.users) {
    B_norm.push_back((u.prm * transmit_frm(scenario.fpa_positions, u)) / sigma);
    lattices.push_back(candidate_lattice(u.region, kApsSpacing));
  }

  auto channel_at = [&](std::size_t k, Position u) -> CVector {
    return (receive_frv(u, scenario.users[k]).adjoint() * B_norm[k]).transpose();
  };

  std::vector<Position> positions(k_users);
  std::vector<CVector> channels(k_users);
  for (std::size_t k = 0; k < k_users; ++k) {
    positions[k] = scenario.users[k].region.clamp({0.0, 0.0});
    channels[k] = channel_at(k, positions[k]);
  }

  const double rho = settings.rho0;
  BeamformingMatrix W = mrt_scaled_init(channels, scenario.sinr_targets, 1.0);
  AuxMatrix T(k_users, k_users);
  for (std::size_t k = 0; k < k_users; ++k) {
    const CVector t_bar = (channels[k].adjoint() * W).transpose();
    T.row(static_cast<Eigen::Index>(k)) =
        project_aux(t_bar, static_cast<Eigen::Index>(k), scenario.sinr_targets[k], 1.0, 1e-9)
            .row.transpose();
  }

  // Scores one candidate placement: a single beamforming pass plus one round
  // of auxiliary projections from the incumbent state, then the penalized
  // objective at rho0.
  auto score_state = [&](const std::vector<CVector>& ch, AuxMatrix t_state) {
    BeamformingMatrix w_new = solve_beamforming(ch, t_state, rho);
    for (std::size_t k = 0; k < k_users; ++k) {
      const CVector t_bar = (ch[k].adjoint() * w_new).transpose();
      t_state.row(static_cast<Eigen::Index>(k)) =
          project_aux(t_bar, static_cast<Eigen::Index>(k), scenario.sinr_targets[k], 1.0, 1e-9)
              .row.transpose();
    }
    double pen = 0.0;
    for (std::size_t k = 0; k < k_users; ++k) {
      const CVector resid =
          (ch[k].adjoint() * w_new).transpose() - t_state.row(static_cast<Eigen::Index>(k)).transpose();
      pen += resid.squaredNorm();
    }
    const double obj = w_new.squaredNorm() + pen / (2.0 * rho);
    return std::make_tuple(obj, std::move(w_new), std::move(t_state));
  };

  for (int cycle = 0; cycle < kApsMaxCycles; ++cycle) {
    bool moved = false;
    for (std::size_t k = 0; k < k_users; ++k) {
      double best_obj = std::numeric_limits<double>::infinity();
      Position best_pos = positions[k];
      BeamformingMatrix best_w;
      AuxMatrix best_t;
      std::vector<CVector> trial = channels;
      for (const Position& cand : lattices[k]) {
        trial[k] = channel_at(k, cand);
        auto [obj, w_new, t_new] = score_state(trial, T);
        if (obj < best_obj) {
          best_obj = obj;
          best_pos = cand;
          best_w = std::move(w_new);
          best_t = std::move(t_new);
        }
      }
      if (best_pos.x != positions[k].x || best_pos.y != positions[k].y) moved = true;
      positions[k] = best_pos;
      channels[k] = channel_at(k, best_pos);
      W = std::move(best_w);
      T = std::move(best_t);
    }
    if (!moved) break;
  }

  return solve(with_point_regions(scenario, positions), settings);
}

SolveResult solve_scheme(SchemeId id, const Scenario& scenario, const PenaltySettings& settings) {
  switch (id) {
    case SchemeId::FA: return solve(scenario, settings);
    case SchemeId::FPA: return solve_fpa(scenario, settings);
    case SchemeId::APS: return solve_aps(scenario, settings);
    case SchemeId::MCP: return solve_mcp(scenario, settings);
  }
  throw std::logic_error("solve_scheme: unreachable");
}

}  // namespace fluidbeam
