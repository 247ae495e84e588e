// Command-line front end: analytical DMT curves and bounds for K-pair
// two-way relaying through an M-antenna relay, plus the seeded outage
// simulator. All outputs are CSV (LF, '.' decimal) or JSON.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relaydmt/allocation.hpp"
#include "relaydmt/ddf.hpp"
#include "relaydmt/dmt_curves.hpp"
#include "relaydmt/montecarlo.hpp"
#include "relaydmt/network.hpp"
#include "relaydmt/piecewise_linear.hpp"
#include "relaydmt/text_io.hpp"

namespace {

using namespace relaydmt;

// Arguments that parse fine but name a configuration the tool refuses to
// run (e.g. subset enumeration past K = 3). Mapped to exit code 3.
struct RefusedConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> make_grid(double start, double stop, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");
    if (stop < start) throw std::invalid_argument("grid stop must be >= start");
    const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (int i = 0; i < count; ++i) grid.push_back(start + i * step);
    return grid;
}

std::vector<double> parse_snr_spec(const std::string& spec) {
    std::vector<double> values;
    if (spec.find(':') != std::string::npos) {
        const auto a = spec.find(':');
        const auto b = spec.find(':', a + 1);
        if (b == std::string::npos)
            throw std::invalid_argument("--snr expects START:STEP:STOP or a comma list");
        const double start = std::stod(spec.substr(0, a));
        const double step = std::stod(spec.substr(a + 1, b - a - 1));
        const double stop = spec.substr(b + 1).empty() ? start : std::stod(spec.substr(b + 1));
        return make_grid(start, stop, step);
    }
    std::size_t pos = 0;
    while (pos < spec.size()) {
        auto comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        values.push_back(std::stod(spec.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (values.empty()) throw std::invalid_argument("--snr list is empty");
    return values;
}

struct CurveArgs {
    std::string scheme = "ppc";
    int m = 1, n = 1, users = 1;
    std::string out = "curve.csv";
    std::string format = "csv";
};

void run_curve(const CurveArgs& args) {
    PiecewiseLinearCurve curve = [&] {
        if (args.scheme == "ppc") return ppc_dmt(args.m, args.n);
        if (args.scheme == "mac-sym") return mac_sym_dmt(args.users, args.m, args.n);
        return bc_sym_dmt(args.users, args.m, args.n);  // "bc-sym"
    }();
    const std::string text =
        args.format == "json" ? curve.to_json() + "\n" : curve.to_csv();
    io::write_file_atomic(args.out, text);
    std::cout << "wrote " << args.out << " (" << curve.vertices().size() << " vertices, r_max="
              << io::format_double(curve.r_max()) << ")\n";
}

struct BoundArgs {
    int pairs = 3, antennas = 6;
    std::string scheme = "mac-bc";
    double r_start = 0.0, r_stop = 0.5, r_step = 0.005;
    std::string out = "bound.csv";
};

void run_bound(const BoundArgs& args) {
    const NetworkConfig cfg{args.pairs, args.antennas, ChannelMode::reciprocal};
    const auto scheme =
        args.scheme == "mac-tdma" ? ReciprocalScheme::mac_tdma : ReciprocalScheme::mac_bc;
    const auto grid = make_grid(args.r_start, args.r_stop, args.r_step);
    const auto samples = lower_bound_reciprocal(cfg, scheme, grid);

    io::CsvWriter csv({"r", "d_lower", "d_upper", "a_star"});
    std::vector<double> rs, ds;
    for (const auto& s : samples) {
        csv.cell(s.r).cell(s.d_lower).cell(s.d_upper).cell(s.a_star);
        csv.end_row();
        rs.push_back(s.r);
        ds.push_back(s.d_lower);
    }
    io::write_file_atomic(args.out, csv.str());

    const double zc = first_zero_crossing(rs, ds);
    std::cout << "wrote " << args.out << "\n";
    if (std::isnan(zc)) {
        std::cout << "scheme=" << args.scheme << " pairs=" << args.pairs
                  << " antennas=" << args.antennas
                  << " zero_crossing: not reached within the r grid\n";
    } else {
        std::cout << "scheme=" << args.scheme << " pairs=" << args.pairs
                  << " antennas=" << args.antennas
                  << " zero_crossing_per_user=" << io::format_double(zc)
                  << " per_pair=" << io::format_double(2.0 * zc) << "\n";
    }
}

struct DdfArgs {
    int pairs = 3, antennas = 6;
    double r_start = 0.0, r_stop = -1.0, r_step = 0.005;
    std::string out = "ddf.csv";
};

void run_ddf(const DdfArgs& args) {
    const NetworkConfig cfg{args.pairs, args.antennas, ChannelMode::nonreciprocal};
    cfg.validate();
    const double stop = args.r_stop >= 0.0 ? args.r_stop : 1.0 / (args.pairs + 1);
    const auto grid = make_grid(args.r_start, stop, args.r_step);

    io::CsvWriter csv({"r", "d_ddf", "d_upper", "argmin_L"});
    for (double r : grid) {
        const DdfValue v = ddf_dmt_detail(r, cfg);
        csv.cell(r).cell(v.diversity).cell(upper_bound_nonreciprocal(r, cfg))
            .cell(v.argmin_subset_size);
        csv.end_row();
    }
    io::write_file_atomic(args.out, csv.str());
    std::cout << "wrote " << args.out << "\n";
}

struct FigureArgs {
    int id = 1;
    int pairs = 3;
    std::vector<int> antennas;
    std::string out;
};

void run_figure(const FigureArgs& args) {
    std::vector<int> m_list = args.antennas;
    if (m_list.empty()) m_list = args.id == 2 ? std::vector<int>{6} : std::vector<int>{4, 5, 6};
    const std::string out = args.out.empty() ? "figure" + std::to_string(args.id) + ".csv"
                                             : args.out;
    const int K = args.pairs;

    if (args.id == 1) {
        // Reciprocal lower/upper bound pairs, one column pair per M.
        std::vector<std::string> header{"r"};
        for (int M : m_list) {
            header.push_back("d_lower_M" + std::to_string(M));
            header.push_back("d_upper_M" + std::to_string(M));
        }
        io::CsvWriter csv(header);
        const auto grid = make_grid(0.0, 0.5, 0.005);
        for (double r : grid) {
            csv.cell(r);
            for (int M : m_list) {
                const NetworkConfig cfg{K, M, ChannelMode::reciprocal};
                csv.cell(solve_macbc(r, cfg).diversity).cell(upper_bound_reciprocal(r, M));
            }
            csv.end_row();
        }
        io::write_file_atomic(out, csv.str());
    } else if (args.id == 2) {
        // Scheme comparison at a single M.
        const int M = m_list.front();
        const NetworkConfig cfg{K, M, ChannelMode::reciprocal};
        io::CsvWriter csv({"r", "d_macbc", "d_mactdma", "d_upper"});
        const auto grid = make_grid(0.0, 0.5, 0.005);
        for (double r : grid) {
            csv.cell(r)
                .cell(solve_macbc(r, cfg).diversity)
                .cell(solve_mactdma(r, cfg).diversity)
                .cell(upper_bound_reciprocal(r, M));
            csv.end_row();
        }
        io::write_file_atomic(out, csv.str());
    } else if (args.id == 3) {
        // Dynamic DF lower bound against the non-reciprocal converse.
        std::vector<std::string> header{"r"};
        for (int M : m_list) {
            header.push_back("d_ddf_M" + std::to_string(M));
            header.push_back("d_upper_M" + std::to_string(M));
        }
        io::CsvWriter csv(header);
        const auto grid = make_grid(0.0, 1.0 / (K + 1), 0.005);
        for (double r : grid) {
            csv.cell(r);
            for (int M : m_list) {
                const NetworkConfig cfg{K, M, ChannelMode::nonreciprocal};
                csv.cell(ddf_dmt(r, cfg)).cell(upper_bound_nonreciprocal(r, cfg));
            }
            csv.end_row();
        }
        io::write_file_atomic(out, csv.str());
    } else {
        throw std::invalid_argument("figure: unknown --id (expected 1, 2 or 3)");
    }
    std::cout << "wrote " << out << "\n";
}

struct SimulateArgs {
    std::string event;
    int pairs = 1, antennas = 1;
    double r = 0.0;
    std::string snr;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    int workers = 0;
    double a = 0.5;
    std::string scheme = "mac-tdma";
    std::string out = "simulate.csv";
};

void run_simulate(const SimulateArgs& args) {
    SimulationRequest req;
    req.r = args.r;
    req.snr_grid_db = parse_snr_spec(args.snr);
    req.trials = args.trials;
    req.seed = args.seed;
    req.workers = args.workers;
    req.phase_split_a = args.a;
    req.scheme = args.scheme == "mac-bc" ? ReciprocalScheme::mac_bc
                                         : ReciprocalScheme::mac_tdma;
    if (args.event == "cutset-reciprocal") {
        req.event = OutageEvent::cutset_reciprocal;
        req.cfg = {args.pairs, args.antennas, ChannelMode::reciprocal};
    } else if (args.event == "ddf") {
        req.event = OutageEvent::ddf;
        req.cfg = {args.pairs, args.antennas, ChannelMode::nonreciprocal};
    } else if (args.event == "static-phases") {
        req.event = OutageEvent::static_phases;
        req.cfg = {args.pairs, args.antennas, ChannelMode::reciprocal};
    } else {
        throw std::invalid_argument("simulate: unknown --event");
    }
    if (req.event != OutageEvent::cutset_reciprocal && args.pairs > 3)
        throw RefusedConfig("simulate: subset events are capped at --pairs 3 (got " +
                            std::to_string(args.pairs) + ")");

    const SnrSweepResult result = sweep_and_fit(req);

    io::CsvWriter csv({"snr_db", "trials", "outages", "p_hat", "std_err"});
    for (const auto& p : result.points) {
        csv.cell(p.snr_db).cell(p.trials).cell(p.outages).cell(p.p_hat).cell(p.std_err);
        csv.end_row();
    }
    io::write_file_atomic(args.out, csv.str());

    nlohmann::json summary;
    summary["event"] = args.event;
    summary["pairs"] = args.pairs;
    summary["antennas"] = args.antennas;
    summary["mode"] = req.cfg.mode == ChannelMode::reciprocal ? "reciprocal" : "nonreciprocal";
    summary["r"] = args.r;
    summary["seed"] = args.seed;
    summary["trials"] = args.trials;
    summary["snr_grid_db"] = req.snr_grid_db;
    if (req.event == OutageEvent::static_phases) {
        summary["a"] = args.a;
        summary["scheme"] = args.scheme;
    }
    summary["analytic_d"] = analytic_reference_exponent(req);
    if (result.fit.valid) {
        summary["fitted_exponent"] = result.fit.slope;
        summary["ci_low"] = result.fit.ci_low;
        summary["ci_high"] = result.fit.ci_high;
        summary["fit_window_db"] = {result.fit.window_lo_db, result.fit.window_hi_db};
    } else {
        summary["fitted_exponent"] = nullptr;
        summary["ci_low"] = nullptr;
        summary["ci_high"] = nullptr;
        summary["fit_window_db"] = nullptr;
    }
    summary["points_used"] = result.fit.points_used;
    summary["status"] = result.fit.status;
    summary["partial"] = result.partial;

    std::filesystem::path json_path(args.out);
    json_path.replace_extension(".json");
    io::write_file_atomic(json_path, summary.dump(2) + "\n");

    std::cout << "wrote " << args.out << " and " << json_path.string() << "\n";
    if (result.fit.valid) {
        std::cout << "fitted_exponent=" << io::format_double(result.fit.slope)
                  << " analytic_d=" << io::format_double(summary["analytic_d"].get<double>())
                  << "\n";
    } else {
        std::cout << result.fit.status << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DMT bounds and outage simulation for K-pair two-way relaying "
                 "through an M-antenna relay"};
    app.require_subcommand(1);

    CurveArgs curve_args;
    auto* curve = app.add_subcommand("curve", "Write a tradeoff curve's vertices");
    curve->add_option("--scheme", curve_args.scheme, "ppc | mac-sym | bc-sym")
        ->required()
        ->check(CLI::IsMember({"ppc", "mac-sym", "bc-sym"}));
    curve->add_option("--m", curve_args.m, "transmit antennas per user")->required();
    curve->add_option("--n", curve_args.n, "receive antennas")->required();
    curve->add_option("--users", curve_args.users, "users (mac-sym/bc-sym)");
    curve->add_option("--out", curve_args.out, "output path");
    curve->add_option("--format", curve_args.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    curve->callback([&] { run_curve(curve_args); });

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "Reciprocal-channel bounds over an r grid");
    bound->add_option("--pairs", bound_args.pairs, "user pairs K");
    bound->add_option("--antennas", bound_args.antennas, "relay antennas M");
    bound->add_option("--scheme", bound_args.scheme, "mac-bc | mac-tdma")
        ->check(CLI::IsMember({"mac-bc", "mac-tdma"}));
    bound->add_option("--r-start", bound_args.r_start);
    bound->add_option("--r-stop", bound_args.r_stop);
    bound->add_option("--r-step", bound_args.r_step);
    bound->add_option("--out", bound_args.out, "output path");
    bound->callback([&] { run_bound(bound_args); });

    DdfArgs ddf_args;
    auto* ddf = app.add_subcommand("ddf", "Dynamic DF tradeoff and converse over an r grid");
    ddf->add_option("--pairs", ddf_args.pairs, "user pairs K");
    ddf->add_option("--antennas", ddf_args.antennas, "relay antennas M");
    ddf->add_option("--r-start", ddf_args.r_start);
    ddf->add_option("--r-stop", ddf_args.r_stop, "default 1/(K+1)");
    ddf->add_option("--r-step", ddf_args.r_step);
    ddf->add_option("--out", ddf_args.out, "output path");
    ddf->callback([&] { run_ddf(ddf_args); });

    FigureArgs figure_args;
    auto* figure = app.add_subcommand("figure", "Reproduce a standard figure's data");
    figure->add_option("--id", figure_args.id, "1 | 2 | 3")->required();
    figure->add_option("--pairs", figure_args.pairs, "user pairs K");
    figure->add_option("--antennas", figure_args.antennas,
                       "relay antenna counts (repeat or comma-separate)")
        ->delimiter(',');
    figure->add_option("--out", figure_args.out, "output path");
    figure->callback([&] { run_figure(figure_args); });

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo outage sweep");
    simulate->add_option("--event", sim_args.event,
                         "cutset-reciprocal | ddf | static-phases")
        ->required()
        ->check(CLI::IsMember({"cutset-reciprocal", "ddf", "static-phases"}));
    simulate->add_option("--pairs", sim_args.pairs, "user pairs K");
    simulate->add_option("--antennas", sim_args.antennas, "relay antennas M");
    simulate->add_option("--r", sim_args.r, "multiplexing gain per user")->required();
    simulate->add_option("--snr", sim_args.snr, "START:STEP:STOP in dB, or comma list")
        ->required();
    simulate->add_option("--trials", sim_args.trials, "Monte Carlo trials per SNR point");
    simulate->add_option("--seed", sim_args.seed, "master seed")
        ->envname("RELAYDMT_SEED");
    simulate->add_option("--workers", sim_args.workers, "0 = hardware concurrency");
    simulate->add_option("--a", sim_args.a, "phase-one fraction (static-phases)");
    simulate->add_option("--scheme", sim_args.scheme, "mac-bc | mac-tdma (static-phases)")
        ->check(CLI::IsMember({"mac-bc", "mac-tdma"}));
    simulate->add_option("--out", sim_args.out, "CSV path; JSON summary sits next to it");
    simulate->callback([&] { run_simulate(sim_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const RefusedConfig& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
