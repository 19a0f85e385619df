/**
 * @file channel_model.hpp
 * @brief Field-response channel construction: per-path phase differences,
 * receive FRVs, the BS-side FRM, position-dependent channel vectors, SINR
 * evaluation and the random scenario sampler.
 */
#ifndef FLUIDBEAM_CHANNEL_MODEL_HPP
#define FLUIDBEAM_CHANNEL_MODEL_HPP

#include <cstdint>

#include "fluidbeam/types.hpp"

namespace fluidbeam {

/// Signal propagation difference rho(u) = x sin(theta) cos(phi) + y cos(theta).
double path_difference(Position u, const PathAngles& a);

/// Receive field response vector f(u), entry i = exp(j 2pi/lambda rho_i(u)). Length L_r.
CVector receive_frv(Position u, const PathGeometry& geom);

/// BS field response matrix G (L_t x N); column n is the transmit FRV of FPA n.
CMatrix transmit_frm(const std::vector<Position>& fpa_positions, const PathGeometry& geom);

/// Channel h(u) = (f(u)^H Sigma G)^T from the BS to one user. Length N.
CVector channel_vector(Position u, const PathGeometry& geom,
                       const std::vector<Position>& fpa_positions);

/// Receive SINR of user k: |h_k^H w_k|^2 / (sum_{q != k} |h_k^H w_q|^2 + sigma^2).
double sinr(const std::vector<CVector>& channels, const BeamformingMatrix& W,
            double noise_power, Eigen::Index k);

/// Statistical description of the random scenario ensemble.
struct ScenarioParams {
  int num_antennas = 16;          // N
  int num_users = 6;              // K
  int num_paths = 10;             // L (= L_t = L_r)
  double region_size = 2.0;       // A, wavelengths; region is centered on the origin
  double sinr_target_db = 10.0;   // common gamma for all users
  double noise_dbm = -80.0;
  double c0_db = -40.0;           // average channel gain at 1 m
  double alpha = 2.8;             // path-loss exponent
  double dist_min_m = 20.0;
  double dist_max_m = 100.0;
  double fpa_spacing = 0.5;       // BS uniform linear array spacing, wavelengths

  void validate() const;
};

/**
 * Draws one scenario: per user a distance, i.i.d. uniform path angles and a
 * diagonal PRM with CN(0, c0 d^-alpha / L) entries. Deterministic given the
 * seed; users are drawn sequentially so a (K+1)-user draw extends a K-user
 * draw with the same seed.
 */
Scenario sample_scenario(const ScenarioParams& params, std::uint64_t seed);

}  // namespace fluidbeam

#endif  // FLUIDBEAM_CHANNEL_MODEL_HPP
