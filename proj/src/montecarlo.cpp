#include "relaydmt/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "relaydmt/ddf.hpp"
#include "relaydmt/dmt_curves.hpp"
#include "relaydmt/rng.hpp"

namespace relaydmt {

namespace {

constexpr int kMaxSubsetPairs = 3;  // 2^(2K)-1 subsets; refuse beyond 63

void check_subset_config(const NetworkConfig& cfg, const char* op) {
    if (cfg.pairs > kMaxSubsetPairs)
        throw std::invalid_argument(std::string(op) +
                                    ": refused, subset enumeration is capped at K <= 3");
}

int resolve_workers(int workers, std::uint64_t trials) {
    int w = workers > 0 ? workers
                        : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return static_cast<int>(std::min<std::uint64_t>(w, trials));
}

// Counts outage events over [0, trials) with per-trial randomness keyed by
// (seed, trial index). The partition into workers cannot change the result.
template <typename Pred>
SweepPoint run_point(const NetworkConfig& cfg, double snr_db, std::uint64_t trials,
                     std::uint64_t seed, int workers, const Pred& is_outage) {
    if (trials < 1) throw std::invalid_argument("run_point: trials must be >= 1");
    const int w = resolve_workers(workers, trials);
    std::vector<std::uint64_t> counts(w, 0);
    std::vector<std::thread> pool;
    pool.reserve(w);
    const std::uint64_t base = trials / w;
    const std::uint64_t rem = trials % w;
    std::uint64_t begin = 0;
    for (int i = 0; i < w; ++i) {
        const std::uint64_t len = base + (static_cast<std::uint64_t>(i) < rem ? 1 : 0);
        const std::uint64_t end = begin + len;
        pool.emplace_back([&, i, begin, end] {
            std::uint64_t local = 0;
            for (std::uint64_t t = begin; t < end; ++t) {
                const ChannelDraw draw = sample_channel(cfg, t, seed);
                if (is_outage(draw)) ++local;
            }
            counts[i] = local;
        });
        begin = end;
    }
    for (auto& th : pool) th.join();

    std::uint64_t outages = 0;
    for (auto c : counts) outages += c;
    const double p = static_cast<double>(outages) / static_cast<double>(trials);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    return {snr_db, trials, outages, p, se};
}

double snr_db_to_linear(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

// Capacity of the MAC cut for the users selected by `mask` (bitmask over
// the 2K columns of the uplink matrix).
double subset_capacity(const Eigen::MatrixXcd& uplink, unsigned mask, double rho) {
    const int total = static_cast<int>(uplink.cols());
    Eigen::MatrixXcd sub(uplink.rows(), __builtin_popcount(mask));
    int c = 0;
    for (int u = 0; u < total; ++u)
        if (mask & (1u << u)) sub.col(c++) = uplink.col(u);
    return logdet_capacity(sub, rho);
}

double miso_downlink_capacity(const Eigen::MatrixXcd& downlink, int user, double rho, int M) {
    return logdet_capacity(downlink.col(user), rho / M);
}

}  // namespace

ChannelDraw sample_channel(const NetworkConfig& cfg, std::uint64_t trial_index,
                           std::uint64_t master_seed) {
    cfg.validate();
    TrialRng rng(master_seed, trial_index);
    const int M = cfg.relay_antennas;
    const int users = cfg.users();

    ChannelDraw draw;
    draw.uplink.resize(M, users);
    for (int u = 0; u < users; ++u)
        for (int a = 0; a < M; ++a) draw.uplink(a, u) = rng.next_cgauss();
    if (cfg.mode == ChannelMode::reciprocal) {
        draw.downlink = draw.uplink;
    } else {
        draw.downlink.resize(M, users);
        for (int u = 0; u < users; ++u)
            for (int a = 0; a < M; ++a) draw.downlink(a, u) = rng.next_cgauss();
    }
    return draw;
}

double logdet_capacity(const Eigen::MatrixXcd& H, double rho) {
    if (!(rho >= 0.0) || !std::isfinite(rho))
        throw std::invalid_argument("logdet_capacity: rho must be finite and nonnegative");
    if (!H.allFinite())
        throw std::invalid_argument("logdet_capacity: non-finite channel entries");
    if (H.size() == 0) return 0.0;

    // det(I + rho H H') = det(I + rho H' H); work on the smaller Gram matrix.
    const bool rows_small = H.rows() <= H.cols();
    const Eigen::MatrixXcd gram =
        rows_small ? Eigen::MatrixXcd(H * H.adjoint()) : Eigen::MatrixXcd(H.adjoint() * H);
    Eigen::MatrixXcd A = rho * gram;
    A += Eigen::MatrixXcd::Identity(A.rows(), A.cols());
    const Eigen::LLT<Eigen::MatrixXcd> llt(A);
    double log2det = 0.0;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        log2det += 2.0 * std::log2(llt.matrixLLT()(i, i).real());
    return log2det;
}

SweepPoint outage_cutset_reciprocal(double r, const NetworkConfig& cfg, double rho,
                                    std::uint64_t trials, std::uint64_t seed, int workers) {
    cfg.validate();
    if (!(r >= 0.0)) throw std::invalid_argument("outage_cutset_reciprocal: r must be >= 0");
    const double rate = r * std::log2(rho);
    const double snr_db = 10.0 * std::log10(rho);
    return run_point(cfg, snr_db, trials, seed, workers, [&](const ChannelDraw& draw) {
        const double c1 = logdet_capacity(draw.uplink.col(0), rho);
        return c1 / 2.0 < rate;
    });
}

SweepPoint outage_ddf(double r, const NetworkConfig& cfg, double rho, std::uint64_t trials,
                      std::uint64_t seed, int workers) {
    cfg.validate();
    check_subset_config(cfg, "outage_ddf");
    if (cfg.mode != ChannelMode::nonreciprocal)
        throw std::invalid_argument("outage_ddf: requires nonreciprocal mode");
    if (!(r >= 0.0)) throw std::invalid_argument("outage_ddf: r must be >= 0");
    const double rate = r * std::log2(rho);
    const double snr_db = 10.0 * std::log10(rho);
    const int K = cfg.pairs;
    const int M = cfg.relay_antennas;
    const unsigned full = (1u << cfg.users()) - 1u;

    return run_point(cfg, snr_db, trials, seed, workers, [&, rate](const ChannelDraw& draw) {
        // Listening fraction demanded by the slowest-decoding subset.
        double a = 0.0;
        for (unsigned mask = 1; mask <= full; ++mask) {
            const double need = __builtin_popcount(mask) * rate;
            if (need <= 0.0) continue;
            const double c1 = subset_capacity(draw.uplink, mask, rho);
            if (c1 <= 0.0) return true;
            a = std::max(a, need / c1);
            if (a > 1.0) return true;
        }
        if (a > 1.0) return true;
        const double c2 = miso_downlink_capacity(draw.downlink, 0, rho, M);
        return (1.0 - a) * c2 / K < rate;
    });
}

SweepPoint outage_static_phases(double r, const NetworkConfig& cfg, double a,
                                ReciprocalScheme scheme, double rho, std::uint64_t trials,
                                std::uint64_t seed, int workers) {
    cfg.validate();
    check_subset_config(cfg, "outage_static_phases");
    if (!(r >= 0.0)) throw std::invalid_argument("outage_static_phases: r must be >= 0");
    if (!(a > 0.0 && a < 1.0))
        throw std::invalid_argument("outage_static_phases: a must lie in (0,1)");
    const double rate = r * std::log2(rho);
    const double snr_db = 10.0 * std::log10(rho);
    const int K = cfg.pairs;
    const int M = cfg.relay_antennas;
    const int users = cfg.users();
    const unsigned full = (1u << users) - 1u;
    const bool check_downlink = scheme == ReciprocalScheme::mac_tdma;

    return run_point(cfg, snr_db, trials, seed, workers, [&, rate, a](const ChannelDraw& draw) {
        for (unsigned mask = 1; mask <= full; ++mask) {
            const double need = __builtin_popcount(mask) * rate;
            if (need <= 0.0) continue;
            if (a * subset_capacity(draw.uplink, mask, rho) < need) return true;
        }
        if (check_downlink) {
            // TDMA slots: each user gets (1-a)/K of the block.
            for (int u = 0; u < users; ++u) {
                const double c2 = miso_downlink_capacity(draw.downlink, u, rho, M);
                if ((1.0 - a) / K * c2 < rate) return true;
            }
        }
        return false;
    });
}

ExponentFit fit_exponent(const std::vector<SweepPoint>& points, std::uint64_t min_outages) {
    ExponentFit fit;
    std::vector<double> xs, ys;
    for (const auto& p : points) {
        if (p.outages < min_outages) continue;
        xs.push_back(p.snr_db / 10.0);  // log10(rho)
        ys.push_back(-std::log10(p.p_hat));
    }
    fit.points_used = static_cast<int>(xs.size());
    if (xs.size() < 2) {
        fit.status = "refused: fewer than 2 SNR points with >= " +
                     std::to_string(min_outages) + " outage events";
        return fit;
    }
    const auto n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx <= 0.0) {
        fit.status = "refused: degenerate SNR grid";
        return fit;
    }
    fit.slope = sxy / sxx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double resid = ys[i] - my - fit.slope * (xs[i] - mx);
        ss_res += resid * resid;
    }
    const double se = xs.size() > 2 ? std::sqrt(ss_res / (n - 2.0) / sxx) : 0.0;
    fit.ci_low = fit.slope - 1.96 * se;
    fit.ci_high = fit.slope + 1.96 * se;
    fit.window_lo_db = *std::min_element(xs.begin(), xs.end()) * 10.0;
    fit.window_hi_db = *std::max_element(xs.begin(), xs.end()) * 10.0;
    fit.valid = true;
    fit.status = "ok";
    return fit;
}

SnrSweepResult sweep_and_fit(const SimulationRequest& req) {
    req.cfg.validate();
    if (req.snr_grid_db.size() < 3)
        throw std::invalid_argument("sweep_and_fit: need at least 3 SNR points");
    SnrSweepResult result;
    result.points.reserve(req.snr_grid_db.size());
    for (double snr_db : req.snr_grid_db) {
        const double rho = snr_db_to_linear(snr_db);
        SweepPoint pt;
        switch (req.event) {
            case OutageEvent::cutset_reciprocal:
                pt = outage_cutset_reciprocal(req.r, req.cfg, rho, req.trials, req.seed,
                                              req.workers);
                break;
            case OutageEvent::ddf:
                pt = outage_ddf(req.r, req.cfg, rho, req.trials, req.seed, req.workers);
                break;
            case OutageEvent::static_phases:
                pt = outage_static_phases(req.r, req.cfg, req.phase_split_a, req.scheme, rho,
                                          req.trials, req.seed, req.workers);
                result.partial = req.scheme == ReciprocalScheme::mac_bc;
                break;
        }
        pt.snr_db = snr_db;  // keep the grid value, not its round-trip through rho
        result.points.push_back(pt);
    }
    result.fit = fit_exponent(result.points);
    return result;
}

double analytic_reference_exponent(const SimulationRequest& req) {
    req.cfg.validate();
    const int M = req.cfg.relay_antennas;
    switch (req.event) {
        case OutageEvent::cutset_reciprocal:
            return upper_bound_reciprocal(req.r, M);
        case OutageEvent::ddf:
            return ddf_dmt(req.r, req.cfg);
        case OutageEvent::static_phases: {
            const auto uplink = mac_sym_dmt(req.cfg.users(), 1, M);
            const double a = req.phase_split_a;
            const double d_up = uplink(req.r / a);
            if (req.scheme == ReciprocalScheme::mac_bc) return d_up;  // phase one only
            const auto downlink = ppc_dmt(M, 1);
            return std::min(d_up, downlink(req.cfg.pairs * req.r / (1.0 - a)));
        }
    }
    throw std::logic_error("analytic_reference_exponent: unknown event");
}

}  // namespace relaydmt
