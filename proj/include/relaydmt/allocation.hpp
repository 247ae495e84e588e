#pragma once

#include <vector>

#include "relaydmt/network.hpp"
#include "relaydmt/piecewise_linear.hpp"

namespace relaydmt {

/// Result of the static two-phase time split. a_star is the fraction of the
/// block spent in the uplink phase; residual is |LHS - RHS| of the
/// equal-diversity condition at a_star.
struct AllocationSolution {
    double a_star = 0.5;
    double diversity = 0.0;
    double residual = 0.0;
};

enum class ReciprocalScheme { mac_bc, mac_tdma };

/// Static DF-MAC-BC split: equalizes the 2K-user uplink MAC diversity at
/// rate r/a against the K-pair broadcast diversity at rate r/(1-a).
/// Past the scheme's maximum multiplexing gain, returns diversity 0 with
/// a_star at the midpoint of the zero plateau.
AllocationSolution solve_macbc(double r, const NetworkConfig& cfg);

/// Static DF-MAC-TDMA split: uplink as in solve_macbc, downlink replaced by
/// the worst point-to-point M x 1 link carrying K TDMA slots, i.e. the
/// single-link curve at rate K*r/(1-a).
AllocationSolution solve_mactdma(double r, const NetworkConfig& cfg);

struct BoundSample {
    double r = 0.0;
    double d_lower = 0.0;
    double d_upper = 0.0;
    double a_star = 0.5;
};

/// Achievable diversity of the static DF-MAC-BC scheme on a grid of r,
/// paired with the cut-set upper bound M(1-2r)+.
std::vector<BoundSample> lower_bound_reciprocal_macbc(const NetworkConfig& cfg,
                                                      const std::vector<double>& r_grid);

/// Same sweep for a chosen reciprocal scheme.
std::vector<BoundSample> lower_bound_reciprocal(const NetworkConfig& cfg,
                                                ReciprocalScheme scheme,
                                                const std::vector<double>& r_grid);

/// Reciprocal-channel converse: M(1 - 2r)+.
double upper_bound_reciprocal(double r, int relay_antennas);

/// The converse as a two-vertex curve [(0, M), (1/2, 0)].
PiecewiseLinearCurve upper_bound_reciprocal_curve(int relay_antennas);

}  // namespace relaydmt
