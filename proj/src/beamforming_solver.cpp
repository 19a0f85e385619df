/**
 * @file beamforming_solver.cpp
 */
#include "fluidbeam/beamforming_solver.hpp"

#include <Eigen/Cholesky>

namespace fluidbeam {

BeamformingMatrix solve_beamforming(const std::vector<CVector>& channels,
                                    const AuxMatrix& T, double rho) {
  if (channels.empty()) throw std::invalid_argument("solve_beamforming: empty channel list");
  if (!(rho > 0.0)) throw std::invalid_argument("solve_beamforming: rho must be > 0");
  const Eigen::Index k_users = static_cast<Eigen::Index>(channels.size());
  const Eigen::Index n = channels.front().size();
  if (T.rows() != k_users || T.cols() != k_users)
    throw std::invalid_argument("solve_beamforming: T must be K x K");

  const double w_pen = 0.5 / rho;
  CMatrix a = CMatrix::Identity(n, n);
  for (const CVector& h : channels) {
    if (h.size() != n || !h.allFinite())
      throw std::invalid_argument("solve_beamforming: channels must be finite, equal-length vectors");
    a.selfadjointView<Eigen::Lower>().rankUpdate(h, w_pen);
  }

  CMatrix rhs = CMatrix::Zero(n, k_users);
  for (Eigen::Index k = 0; k < k_users; ++k) {
    for (Eigen::Index q = 0; q < k_users; ++q)
      rhs.col(k) += T(q, k) * channels[static_cast<std::size_t>(q)];
    rhs.col(k) *= w_pen;
  }

  Eigen::LLT<CMatrix> llt(a.selfadjointView<Eigen::Lower>());
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("solve_beamforming: Cholesky factorization failed");
  return llt.solve(rhs);
}

}  // namespace fluidbeam
