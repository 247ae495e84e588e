#include "relaydmt/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relaydmt/dmt_curves.hpp"

namespace relaydmt {

namespace {

// Both phase diversities as functions of the phase-one fraction a:
//   LHS(a) = uplink(r/a)                  nondecreasing in a
//   RHS(a) = downlink(rate_scale*r/(1-a)) nonincreasing in a
// The equal-diversity point is their unique crossing when one exists.
AllocationSolution solve_two_phase(double r, const PiecewiseLinearCurve& uplink,
                                   const PiecewiseLinearCurve& downlink,
                                   double rate_scale) {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("solve_two_phase: r must be finite and nonnegative");
    if (r == 0.0) return {0.5, uplink(0.0), 0.0};  // every a is optimal at r = 0

    const auto lhs = [&](double a) { return uplink(r / a); };
    const auto rhs = [&](double a) { return downlink(rate_scale * r / (1.0 - a)); };

    // Positive diversity needs a > r/zL in phase one and a < 1 - s*r/zR in
    // phase two. An empty intersection means r is past the scheme's maximum
    // multiplexing gain; the max-min is then 0 on the whole overlap.
    const double a_need_up = r / uplink.zero_crossing();
    const double a_need_down = 1.0 - rate_scale * r / downlink.zero_crossing();
    if (a_need_up >= a_need_down) {
        const double lo = std::clamp(a_need_down, 0.0, 1.0);
        const double hi = std::clamp(a_need_up, 0.0, 1.0);
        return {0.5 * (lo + hi), 0.0, 0.0};
    }

    double lo = 1e-9, hi = 1.0 - 1e-9;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (lhs(mid) - rhs(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double a_star = 0.5 * (lo + hi);
    const double left = lhs(a_star);
    const double right = rhs(a_star);
    return {a_star, std::min(left, right), std::abs(left - right)};
}

}  // namespace

AllocationSolution solve_macbc(double r, const NetworkConfig& cfg) {
    cfg.validate();
    const auto up = mac_sym_dmt(cfg.users(), 1, cfg.relay_antennas);
    const auto down = bc_sym_dmt(cfg.pairs, 1, cfg.relay_antennas);
    return solve_two_phase(r, up, down, 1.0);
}

AllocationSolution solve_mactdma(double r, const NetworkConfig& cfg) {
    cfg.validate();
    const auto up = mac_sym_dmt(cfg.users(), 1, cfg.relay_antennas);
    const auto down = ppc_dmt(cfg.relay_antennas, 1);
    return solve_two_phase(r, up, down, static_cast<double>(cfg.pairs));
}

std::vector<BoundSample> lower_bound_reciprocal(const NetworkConfig& cfg,
                                                ReciprocalScheme scheme,
                                                const std::vector<double>& r_grid) {
    cfg.validate();
    std::vector<BoundSample> samples;
    samples.reserve(r_grid.size());
    for (double r : r_grid) {
        const AllocationSolution sol = scheme == ReciprocalScheme::mac_bc
                                           ? solve_macbc(r, cfg)
                                           : solve_mactdma(r, cfg);
        samples.push_back({r, sol.diversity, upper_bound_reciprocal(r, cfg.relay_antennas),
                           sol.a_star});
    }
    return samples;
}

std::vector<BoundSample> lower_bound_reciprocal_macbc(const NetworkConfig& cfg,
                                                      const std::vector<double>& r_grid) {
    return lower_bound_reciprocal(cfg, ReciprocalScheme::mac_bc, r_grid);
}

double upper_bound_reciprocal(double r, int relay_antennas) {
    if (relay_antennas < 1)
        throw std::invalid_argument("upper_bound_reciprocal: relay_antennas must be >= 1");
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("upper_bound_reciprocal: r must be finite and nonnegative");
    return relay_antennas * std::max(0.0, 1.0 - 2.0 * r);
}

PiecewiseLinearCurve upper_bound_reciprocal_curve(int relay_antennas) {
    if (relay_antennas < 1)
        throw std::invalid_argument("upper_bound_reciprocal_curve: relay_antennas must be >= 1");
    return PiecewiseLinearCurve({{0.0, static_cast<double>(relay_antennas)}, {0.5, 0.0}});
}

}  // namespace relaydmt
