/**
 * @file beamforming_solver.hpp
 * @brief Closed-form update of all transmit precoders: the unconstrained
 * regularized least-squares subproblem over W with channels and auxiliary
 * variables fixed.
 */
#ifndef FLUIDBEAM_BEAMFORMING_SOLVER_HPP
#define FLUIDBEAM_BEAMFORMING_SOLVER_HPP

#include "fluidbeam/types.hpp"

namespace fluidbeam {

/**
 * Minimizes sum_k ||w_k||^2 + (1/2rho) sum_{k,q} |h_k^H w_q - t[k][q]|^2.
 *
 * The normal matrix A = I_N + (1/2rho) sum_q h_q h_q^H is Hermitian positive
 * definite; it is factored once (LLT) and reused for all K right-hand sides
 * w_k = (1/2rho) A^{-1} sum_q t[q][k] h_q.
 */
BeamformingMatrix solve_beamforming(const std::vector<CVector>& channels,
                                    const AuxMatrix& T, double rho);

}  // namespace fluidbeam

#endif  // FLUIDBEAM_BEAMFORMING_SOLVER_HPP
