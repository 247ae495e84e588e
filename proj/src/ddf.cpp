#include "relaydmt/ddf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "relaydmt/dmt_curves.hpp"
#include "relaydmt/piecewise_linear.hpp"

namespace relaydmt {

void AlphaProfile::validate() const {
    if (dims_subset < 1 || dims_relay < 1)
        throw std::invalid_argument("AlphaProfile: dims must be >= 1");
    const auto want = static_cast<std::size_t>(std::min(dims_subset, dims_relay));
    if (alpha1.size() != want)
        throw std::invalid_argument("AlphaProfile: alpha1 must have min(L, M) entries");
    for (std::size_t j = 0; j < alpha1.size(); ++j) {
        if (alpha1[j] < 0.0) throw std::invalid_argument("AlphaProfile: negative exponent");
        if (j > 0 && alpha1[j] > alpha1[j - 1] + 1e-12)
            throw std::invalid_argument("AlphaProfile: alpha1 must be nonincreasing");
    }
    if (alpha2 < 0.0) throw std::invalid_argument("AlphaProfile: negative exponent");
}

double AlphaProfile::objective() const {
    const int gap = std::abs(dims_subset - dims_relay);
    double sum = 0.0;
    for (std::size_t j = 0; j < alpha1.size(); ++j)
        sum += (2.0 * (j + 1) - 1.0 + gap) * alpha1[j];
    return sum + dims_relay * alpha2;
}

double AlphaProfile::s1() const {
    double sum = 0.0;
    for (double a : alpha1) sum += std::max(0.0, 1.0 - a);
    return sum;
}

double AlphaProfile::s2() const { return std::max(0.0, 1.0 - alpha2); }

double outage_constraint(double s1, double s2, int pairs, int subset_size) {
    if (s1 <= 0.0 || s2 <= 0.0) return 0.0;
    return s1 * s2 / (pairs * s1 + subset_size * s2);
}

namespace {

template <typename F>
double golden_section_min(const F& f, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return std::min(f1, f2);
}

void check_inner_args(int subset_size, int pairs, int relay_antennas, double r) {
    if (pairs < 1) throw std::invalid_argument("inner_ddf_opt: pairs must be >= 1");
    if (relay_antennas < 1)
        throw std::invalid_argument("inner_ddf_opt: relay_antennas must be >= 1");
    if (subset_size < 1 || subset_size > 2 * pairs)
        throw std::invalid_argument("inner_ddf_opt: subset size must be in 1..2K");
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("inner_ddf_opt: r must be finite and nonnegative");
}

}  // namespace

OutagePoint inner_ddf_opt_point(int subset_size, int pairs, int relay_antennas, double r) {
    check_inner_args(subset_size, pairs, relay_antennas, r);
    const int L = subset_size;
    const int K = pairs;
    const int M = relay_antennas;
    const double s1_hi = std::min(L, M);

    // Zero-cost point (all exponents 0) already inside the closed region.
    if (outage_constraint(s1_hi, 1.0, K, L) <= r) return {s1_hi, 1.0, 0.0};

    const auto uplink_cost = ppc_dmt(L, M);
    if (r == 0.0) {
        // Constraint forces s1*s2 = 0; dropping the downlink is never worse
        // since uplink_cost(0) = L*M >= M.
        return {s1_hi, 0.0, static_cast<double>(M)};
    }

    // Here r*K < 1 (otherwise the zero-cost point would have been feasible).
    // The minimum lies on the constraint boundary s2 = r*K*s1/(s1 - r*L),
    // clamped at s2 = 1 for s1 <= s1_lo.
    const double s1_lo = r * L / (1.0 - r * K);
    const auto boundary_s2 = [&](double s1) {
        if (s1 <= s1_lo) return 1.0;
        return std::min(1.0, r * K * s1 / (s1 - r * L));
    };
    const auto cost = [&](double s1) {
        return uplink_cost(s1) + M * (1.0 - boundary_s2(s1));
    };

    // Mesh the boundary: a uniform 1e-3 grid plus its breakpoints (the
    // uplink-curve vertices and the clamp point), then polish locally.
    std::vector<double> mesh;
    const int n_steps = static_cast<int>(std::ceil((s1_hi - s1_lo) / 1e-3));
    mesh.reserve(n_steps + 10);
    for (int i = 0; i <= n_steps; ++i)
        mesh.push_back(s1_lo + (s1_hi - s1_lo) * i / n_steps);
    for (int k = 1; k < s1_hi; ++k)
        if (k > s1_lo) mesh.push_back(k);
    std::sort(mesh.begin(), mesh.end());

    double best_s1 = mesh.front();
    double best = cost(best_s1);
    for (double s1 : mesh) {
        const double c = cost(s1);
        if (c < best) {
            best = c;
            best_s1 = s1;
        }
    }
    const double span = (s1_hi - s1_lo) / n_steps;
    const double refined = golden_section_min(cost, std::max(s1_lo, best_s1 - span),
                                              std::min(s1_hi, best_s1 + span));
    if (refined < best) best = refined;
    return {best_s1, boundary_s2(best_s1), best};
}

double inner_ddf_opt(int subset_size, int pairs, int relay_antennas, double r) {
    return inner_ddf_opt_point(subset_size, pairs, relay_antennas, r).cost;
}

DdfValue ddf_dmt_detail(double r, const NetworkConfig& cfg) {
    cfg.validate();
    DdfValue out{std::numeric_limits<double>::infinity(), 1};
    for (int L = 1; L <= cfg.users(); ++L) {
        const double v = inner_ddf_opt(L, cfg.pairs, cfg.relay_antennas, r);
        if (v < out.diversity - 1e-12) {  // ties keep the smaller subset size
            out.diversity = v;
            out.argmin_subset_size = L;
        }
    }
    return out;
}

double ddf_dmt(double r, const NetworkConfig& cfg) { return ddf_dmt_detail(r, cfg).diversity; }

double upper_bound_nonreciprocal(double r, const NetworkConfig& cfg) {
    cfg.validate();
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("upper_bound_nonreciprocal: r must be finite and nonnegative");
    if (r >= 1.0)
        throw std::invalid_argument("upper_bound_nonreciprocal: r must be < 1");
    const double ratio = (1.0 - (cfg.pairs + 1) * r) / (1.0 - r);
    return cfg.relay_antennas * std::max(0.0, ratio);
}

double converse_outage_opt(double r, const NetworkConfig& cfg) {
    cfg.validate();
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("converse_outage_opt: r must be finite and nonnegative");
    if (r >= 1.0) throw std::invalid_argument("converse_outage_opt: r must be < 1");

    const int K = cfg.pairs;
    const int M = cfg.relay_antennas;
    // Cheapest feasible alpha2 for a given alpha1, from inverting the
    // constraint S1*S2/(K*S1 + S2) <= r in S2.
    const auto profile_cost = [&](double a1) {
        const double s1 = 1.0 - a1;
        if (s1 <= r) return M * a1;
        const double s2_max = r * K * s1 / (s1 - r);
        if (s2_max >= 1.0) return M * a1;
        return M * (a1 + (1.0 - s2_max));
    };

    double best = std::numeric_limits<double>::infinity();
    double best_a1 = 0.0;
    const int coarse = 1000;
    for (int i = 0; i <= coarse; ++i) {
        const double a1 = static_cast<double>(i) / coarse;
        const double c = profile_cost(a1);
        if (c < best) {
            best = c;
            best_a1 = a1;
        }
    }
    double window = 1.0 / coarse;
    for (int level = 0; level < 4; ++level) {
        const double lo = std::max(0.0, best_a1 - window);
        const double hi = std::min(1.0, best_a1 + window);
        const int fine = 80;
        for (int i = 0; i <= fine; ++i) {
            const double a1 = lo + (hi - lo) * i / fine;
            const double c = profile_cost(a1);
            if (c < best) {
                best = c;
                best_a1 = a1;
            }
        }
        window /= 20.0;
    }
    return best;
}

ListeningFraction dynamic_listening_fraction(const std::vector<SubsetCapacity>& capacities,
                                             double rate) {
    if (capacities.empty())
        throw std::invalid_argument("dynamic_listening_fraction: no subsets given");
    if (!(rate >= 0.0) || !std::isfinite(rate))
        throw std::invalid_argument("dynamic_listening_fraction: rate must be finite and >= 0");
    double a = 0.0;
    for (const auto& sc : capacities) {
        if (sc.cardinality < 1)
            throw std::invalid_argument("dynamic_listening_fraction: cardinality must be >= 1");
        if (!(sc.capacity >= 0.0))
            throw std::invalid_argument("dynamic_listening_fraction: negative capacity");
        const double demand = sc.cardinality * rate;
        if (demand == 0.0) continue;
        const double ratio =
            sc.capacity > 0.0 ? demand / sc.capacity : std::numeric_limits<double>::infinity();
        a = std::max(a, ratio);
    }
    return {a, a > 1.0};
}

}  // namespace relaydmt
