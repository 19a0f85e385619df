/**
 * @file channel_model.cpp
 */
#include "fluidbeam/channel_model.hpp"

#include <numbers>

#include "fluidbeam/rng.hpp"

namespace fluidbeam {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double path_difference(Position u, const PathAngles& a) {
  return u.x * std::sin(a.elevation) * std::cos(a.azimuth) + u.y * std::cos(a.elevation);
}

CVector receive_frv(Position u, const PathGeometry& geom) {
  const Eigen::Index lr = geom.num_receive_paths();
  CVector f(lr);
  const double k0 = kTwoPi / geom.wavelength;
  for (Eigen::Index i = 0; i < lr; ++i) {
    const double phase = k0 * path_difference(u, geom.receive_angles[static_cast<std::size_t>(i)]);
    f(i) = Complex(std::cos(phase), std::sin(phase));
  }
  return f;
}

CMatrix transmit_frm(const std::vector<Position>& fpa_positions, const PathGeometry& geom) {
  const Eigen::Index lt = geom.num_transmit_paths();
  const Eigen::Index n = static_cast<Eigen::Index>(fpa_positions.size());
  CMatrix g(lt, n);
  const double k0 = kTwoPi / geom.wavelength;
  for (Eigen::Index col = 0; col < n; ++col) {
    const Position v = fpa_positions[static_cast<std::size_t>(col)];
    for (Eigen::Index j = 0; j < lt; ++j) {
      const double phase = k0 * path_difference(v, geom.transmit_angles[static_cast<std::size_t>(j)]);
      g(j, col) = Complex(std::cos(phase), std::sin(phase));
    }
  }
  return g;
}

CVector channel_vector(Position u, const PathGeometry& geom,
                       const std::vector<Position>& fpa_positions) {
  geom.validate();
  const CVector f = receive_frv(u, geom);
  const CMatrix g = transmit_frm(fpa_positions, geom);
  // h = (f^H Sigma G)^T: plain transpose, so entries are the row f^H Sigma G.
  return (f.adjoint() * geom.prm * g).transpose();
}

double sinr(const std::vector<CVector>& channels, const BeamformingMatrix& W,
            double noise_power, Eigen::Index k) {
  if (k < 0 || k >= static_cast<Eigen::Index>(channels.size()))
    throw std::invalid_argument("sinr: user index out of range");
  const CVector& h = channels[static_cast<std::size_t>(k)];
  double interference = 0.0;
  for (Eigen::Index q = 0; q < W.cols(); ++q) {
    if (q == k) continue;
    interference += std::norm(Complex(h.adjoint() * W.col(q)));
  }
  const double signal = std::norm(Complex(h.adjoint() * W.col(k)));
  return signal / (interference + noise_power);
}

void ScenarioParams::validate() const {
  if (num_antennas < 1 || num_users < 1 || num_paths < 1)
    throw std::invalid_argument("ScenarioParams: N, K, L must all be >= 1");
  if (region_size < 0.0)
    throw std::invalid_argument("ScenarioParams: region size must be >= 0");
  if (dist_min_m <= 0.0 || dist_max_m < dist_min_m)
    throw std::invalid_argument("ScenarioParams: require 0 < dist_min <= dist_max");
}

Scenario sample_scenario(const ScenarioParams& params, std::uint64_t seed) {
  params.validate();
  Rng rng(seed);

  Scenario sc;
  sc.fpa_positions.reserve(static_cast<std::size_t>(params.num_antennas));
  for (int n = 0; n < params.num_antennas; ++n)
    sc.fpa_positions.push_back({params.fpa_spacing * n, 0.0});

  sc.noise_power = dbm_to_watts(params.noise_dbm);
  const double c0 = db_to_linear(params.c0_db);
  const double gamma = db_to_linear(params.sinr_target_db);
  const Region region = Region::centered_square(params.region_size);
  constexpr double kHalfPi = std::numbers::pi / 2.0;

  const int L = params.num_paths;
  for (int k = 0; k < params.num_users; ++k) {
    PathGeometry geom;
    geom.wavelength = 1.0;
    geom.region = region;
    const double d = rng.uniform(params.dist_min_m, params.dist_max_m);
    geom.receive_angles.reserve(static_cast<std::size_t>(L));
    geom.transmit_angles.reserve(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i)
      geom.receive_angles.push_back({rng.uniform(-kHalfPi, kHalfPi), rng.uniform(-kHalfPi, kHalfPi)});
    for (int j = 0; j < L; ++j)
      geom.transmit_angles.push_back({rng.uniform(-kHalfPi, kHalfPi), rng.uniform(-kHalfPi, kHalfPi)});
    const double path_var = c0 * std::pow(d, -params.alpha) / L;
    geom.prm = CMatrix::Zero(L, L);
    for (int i = 0; i < L; ++i) geom.prm(i, i) = rng.complex_normal(path_var);
    sc.users.push_back(std::move(geom));
    sc.user_distances.push_back(d);
    sc.sinr_targets.push_back(gamma);
  }
  return sc;
}

}  // namespace fluidbeam
