#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "relaydmt/allocation.hpp"
#include "relaydmt/network.hpp"

namespace relaydmt {

/// One quasi-static fading realization: column k holds the M x 1 channel of
/// user k (users ordered pair-major, so columns 2k and 2k+1 are pair k).
/// In reciprocal mode downlink is bit-identical to uplink.
struct ChannelDraw {
    Eigen::MatrixXcd uplink;    // M x 2K
    Eigen::MatrixXcd downlink;  // M x 2K
};

/// Deterministic in (master_seed, trial_index): the same pair always yields
/// the same draw, independent of any parallel schedule.
ChannelDraw sample_channel(const NetworkConfig& cfg, std::uint64_t trial_index,
                           std::uint64_t master_seed);

/// log2 det(I + rho * H * H'), computed on the smaller Gram side. Throws
/// std::invalid_argument for non-finite entries or negative rho.
double logdet_capacity(const Eigen::MatrixXcd& H, double rho);

struct SweepPoint {
    double snr_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t outages = 0;
    double p_hat = 0.0;
    double std_err = 0.0;
};

struct ExponentFit {
    bool valid = false;
    double slope = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double window_lo_db = 0.0;  // SNR range actually used
    double window_hi_db = 0.0;
    int points_used = 0;
    std::string status;
};

struct SnrSweepResult {
    std::vector<SweepPoint> points;
    ExponentFit fit;
    bool partial = false;  // true when only one phase of a scheme is simulated
};

enum class OutageEvent { cutset_reciprocal, ddf, static_phases };

struct SimulationRequest {
    OutageEvent event = OutageEvent::cutset_reciprocal;
    NetworkConfig cfg;
    double r = 0.0;
    std::vector<double> snr_grid_db;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    int workers = 0;  // 0 = hardware concurrency
    // static_phases only:
    double phase_split_a = 0.5;
    ReciprocalScheme scheme = ReciprocalScheme::mac_tdma;
};

/// Genie cut-set outage {C1/2 < R} of one user's M x 1 uplink, R = r*log2(rho).
SweepPoint outage_cutset_reciprocal(double r, const NetworkConfig& cfg, double rho,
                                    std::uint64_t trials, std::uint64_t seed,
                                    int workers = 0);

/// Dynamic DF outage: listening fraction a from all nonempty decoding
/// subsets, outage when a > 1 or the probe user's downlink slot rate falls
/// short. Requires nonreciprocal mode and K <= 3.
SweepPoint outage_ddf(double r, const NetworkConfig& cfg, double rho,
                      std::uint64_t trials, std::uint64_t seed, int workers = 0);

/// Static two-phase outage at a fixed split a. Phase one is the 2K-user MAC
/// (any subset failing a*C1 < |S|*R). Phase two: mac_tdma checks every
/// user's TDMA slot; mac_bc is not simulated (partial result, phase one
/// only). Requires K <= 3.
SweepPoint outage_static_phases(double r, const NetworkConfig& cfg, double a,
                                ReciprocalScheme scheme, double rho,
                                std::uint64_t trials, std::uint64_t seed,
                                int workers = 0);

/// Least-squares slope of -log10(p_hat) against log10(rho) over the points
/// with at least min_outages outage events; 95% CI from the residuals.
ExponentFit fit_exponent(const std::vector<SweepPoint>& points,
                         std::uint64_t min_outages = 100);

/// Run the requested event over the SNR grid (>= 3 points) and fit.
SnrSweepResult sweep_and_fit(const SimulationRequest& req);

/// High-SNR exponent the requested event should exhibit, for reporting next
/// to the fitted one.
double analytic_reference_exponent(const SimulationRequest& req);

}  // namespace relaydmt
