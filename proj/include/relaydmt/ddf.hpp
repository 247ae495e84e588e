#pragma once

#include <vector>

#include "relaydmt/network.hpp"

namespace relaydmt {

/// Eigenvalue-level exponents parameterizing an outage region of the dynamic
/// DF scheme: alpha1 for the uplink matrix of a decoding subset of size
/// dims_subset, alpha2 for the single downlink level. alpha1 must be
/// nonincreasing with min(dims_subset, dims_relay) nonnegative entries.
struct AlphaProfile {
    std::vector<double> alpha1;
    double alpha2 = 0.0;
    int dims_subset = 1;  // |Lambda|
    int dims_relay = 1;   // M (receiver side uplink, transmitter side downlink)

    void validate() const;

    /// Sum of the weighted exponents: uplink weights 2j-1+|L-M|, downlink
    /// weight M.
    double objective() const;

    /// Effective uplink exponent sum, sum of (1 - alpha1_j)+.
    double s1() const;

    /// Effective downlink exponent, (1 - alpha2)+.
    double s2() const;
};

/// A point of the reduced 2-D search together with its cost.
struct OutagePoint {
    double s1 = 0.0;
    double s2 = 0.0;
    double cost = 0.0;
};

/// Harmonic-style outage statistic s1*s2 / (K*s1 + L*s2); 0 when s1*s2 = 0.
double outage_constraint(double s1, double s2, int pairs, int subset_size);

/// Diversity of the dynamic DF outage event restricted to decoding subsets
/// of size subset_size: minimize d_ppc(subset_size, M)(s1) + M(1-s2) over
/// the closure of { outage_constraint(s1, s2) < r }.
double inner_ddf_opt(int subset_size, int pairs, int relay_antennas, double r);

/// Same, also reporting the minimizing (s1, s2).
OutagePoint inner_ddf_opt_point(int subset_size, int pairs, int relay_antennas, double r);

/// Dynamic decode-and-forward tradeoff: min of inner_ddf_opt over subset
/// sizes 1..2K. Ties go to the smaller subset size.
double ddf_dmt(double r, const NetworkConfig& cfg);

struct DdfValue {
    double diversity = 0.0;
    int argmin_subset_size = 1;
};

DdfValue ddf_dmt_detail(double r, const NetworkConfig& cfg);

/// Non-reciprocal converse in closed form: M * ((1-(K+1)r)/(1-r))+.
/// Throws std::invalid_argument for r >= 1.
double upper_bound_nonreciprocal(double r, const NetworkConfig& cfg);

/// The converse rederived numerically: minimize M*(alpha1 + alpha2) over
/// [0,1]^2 subject to the closed constraint set of the genie-aided outage
/// event. Independent of the closed form above.
double converse_outage_opt(double r, const NetworkConfig& cfg);

struct SubsetCapacity {
    int cardinality = 1;
    double capacity = 0.0;  // bits per channel use
};

struct ListeningFraction {
    double a = 0.0;
    bool outage = false;  // a > 1 (or infinite)
};

/// Fraction of the block the relay must listen so every subset of messages
/// decodes: max over subsets of |Lambda|*R / C1(Lambda). Flags outage when
/// the fraction exceeds 1; zero capacity at positive rate gives +infinity.
ListeningFraction dynamic_listening_fraction(const std::vector<SubsetCapacity>& capacities,
                                             double rate);

}  // namespace relaydmt
