#pragma once

#include "relaydmt/piecewise_linear.hpp"

namespace relaydmt {

/// Antenna/user counts of a fading link. num_users is 1 for point-to-point.
struct AntennaSpec {
    int m = 1;          // transmit antennas per user
    int n = 1;          // receive antennas
    int num_users = 1;

    /// Throws std::invalid_argument unless all fields are >= 1.
    void validate() const;
};

/// Optimal tradeoff of an m x n point-to-point Rayleigh channel: the
/// piecewise linear curve through d(k) = (m-k)(n-k), k = 0..min(m,n).
PiecewiseLinearCurve ppc_dmt(int m, int n);

/// Symmetric-rate tradeoff of a multiple-access channel with `users`
/// transmitters (m antennas each) and an n-antenna receiver. Follows the
/// single-user curve up to r = min(m, n/(users+1)) and the pooled-antenna
/// curve d_ppc(users*m, n)(users*r) beyond it.
PiecewiseLinearCurve mac_sym_dmt(int users, int m, int n);

/// Symmetric broadcast tradeoff; equals mac_sym_dmt by MAC-BC duality.
PiecewiseLinearCurve bc_sym_dmt(int users, int m, int n);

}  // namespace relaydmt
