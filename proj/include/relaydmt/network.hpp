#pragma once

#include <stdexcept>

namespace relaydmt {

/// Whether the user->relay and relay->user channels are the same matrix
/// (reciprocal) or drawn independently (nonreciprocal).
enum class ChannelMode { reciprocal, nonreciprocal };

/// K user pairs, one relay with M antennas, every user single-antenna.
struct NetworkConfig {
    int pairs = 1;           // K
    int relay_antennas = 1;  // M
    ChannelMode mode = ChannelMode::reciprocal;

    void validate() const {
        if (pairs < 1) throw std::invalid_argument("NetworkConfig: pairs must be >= 1");
        if (relay_antennas < 1)
            throw std::invalid_argument("NetworkConfig: relay_antennas must be >= 1");
    }

    int users() const { return 2 * pairs; }
};

}  // namespace relaydmt
