/**
 * @file baselines.hpp
 * @brief Comparison schemes: fixed antennas at the origin (FPA), alternating
 * selection over a half-wavelength lattice (APS) and per-user maximum channel
 * power placement (MCP). Each reduces to the penalty solver with collapsed
 * moving regions.
 */
#ifndef FLUIDBEAM_BASELINES_HPP
#define FLUIDBEAM_BASELINES_HPP

#include <string>

#include "fluidbeam/ao_engine.hpp"

namespace fluidbeam {

enum class SchemeId { FA, FPA, APS, MCP };

std::string to_string(SchemeId id);
SchemeId scheme_from_string(const std::string& name);

/// All antennas pinned at the local origin.
SolveResult solve_fpa(const Scenario& scenario, const PenaltySettings& settings);

/// Alternating best-response selection over the lambda/2 candidate lattice,
/// then a full solve with positions frozen at the selected grid points.
SolveResult solve_aps(const Scenario& scenario, const PenaltySettings& settings);

/// Each user placed at the grid point maximizing its own channel power
/// (lambda/50 resolution), then a frozen-position solve.
SolveResult solve_mcp(const Scenario& scenario, const PenaltySettings& settings);

/// Dispatch on scheme id; SchemeId::FA runs the plain solver.
SolveResult solve_scheme(SchemeId id, const Scenario& scenario, const PenaltySettings& settings);

/// Position of maximum channel power over a square grid of the given spacing
/// inside the user's region; ties broken toward the lowest (x, then y).
Position max_channel_power_position(const PathGeometry& geom,
                                    const std::vector<Position>& fpa_positions, double spacing);

}  // namespace fluidbeam

#endif  // FLUIDBEAM_BASELINES_HPP
