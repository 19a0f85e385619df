/**
 * @file types.hpp
 * @brief Core value types shared across the solver: positions, angle sets,
 * per-user path geometry and sampled scenarios. All geometry is expressed in
 * carrier wavelengths; powers are linear watts except at I/O boundaries.
 */
#ifndef FLUIDBEAM_TYPES_HPP
#define FLUIDBEAM_TYPES_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace fluidbeam {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Transmit precoders, one column per user (N x K).
using BeamformingMatrix = Eigen::MatrixXcd;

/// Auxiliary variables t[k][q] tracking h_k(u_k)^H w_q (K x K).
using AuxMatrix = Eigen::MatrixXcd;

// dB / dBm conversions. Internally everything is linear watts.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double v) { return 10.0 * std::log10(v); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

/// 2-D antenna coordinate in a local plane, in wavelengths.
struct Position {
  double x = 0.0;
  double y = 0.0;

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

/// Rectangular moving region [x_min,x_max] x [y_min,y_max].
struct Region {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  static Region centered_square(double side) {
    return Region{-side / 2.0, side / 2.0, -side / 2.0, side / 2.0};
  }
  static Region single_point(Position p) { return Region{p.x, p.x, p.y, p.y}; }

  bool valid() const { return x_min <= x_max && y_min <= y_max; }
  bool is_point() const { return x_min == x_max && y_min == y_max; }
  bool contains(Position p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  Position clamp(Position p) const {
    return {std::clamp(p.x, x_min, x_max), std::clamp(p.y, y_min, y_max)};
  }
};

/// Elevation/azimuth pair for one propagation path, in radians.
struct PathAngles {
  double elevation = 0.0;
  double azimuth = 0.0;
};

/**
 * Geometric description of one user's downlink channel: receive/transmit
 * path angles, the path response matrix coupling them, the antenna moving
 * region and the carrier wavelength. Immutable once built.
 */
struct PathGeometry {
  std::vector<PathAngles> receive_angles;   // length L_r
  std::vector<PathAngles> transmit_angles;  // length L_t
  CMatrix prm;                              // L_r x L_t
  Region region;
  double wavelength = 1.0;

  Eigen::Index num_receive_paths() const { return static_cast<Eigen::Index>(receive_angles.size()); }
  Eigen::Index num_transmit_paths() const { return static_cast<Eigen::Index>(transmit_angles.size()); }

  void validate() const {
    if (wavelength <= 0.0) throw std::invalid_argument("PathGeometry: wavelength must be > 0");
    if (prm.rows() != num_receive_paths() || prm.cols() != num_transmit_paths())
      throw std::invalid_argument("PathGeometry: PRM dimensions do not match angle lists");
    if (!region.valid()) throw std::invalid_argument("PathGeometry: invalid region bounds");
  }
};

/// One sampled multi-user downlink instance.
struct Scenario {
  std::vector<Position> fpa_positions;   // N base-station antennas
  std::vector<PathGeometry> users;       // K users
  double noise_power = 0.0;              // sigma^2, linear watts
  std::vector<double> sinr_targets;      // gamma_k, linear
  std::vector<double> user_distances;    // d_k, meters

  Eigen::Index num_antennas() const { return static_cast<Eigen::Index>(fpa_positions.size()); }
  Eigen::Index num_users() const { return static_cast<Eigen::Index>(users.size()); }

  void validate() const {
    if (noise_power <= 0.0) throw std::invalid_argument("Scenario: noise_power must be > 0");
    if (users.size() != sinr_targets.size())
      throw std::invalid_argument("Scenario: sinr_targets length must match users");
    for (double g : sinr_targets)
      if (g <= 0.0) throw std::invalid_argument("Scenario: SINR targets must be > 0");
    for (const auto& u : users) u.validate();
  }
};

}  // namespace fluidbeam

#endif  // FLUIDBEAM_TYPES_HPP
