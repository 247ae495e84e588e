#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace relaydmt {

/// Counter-based per-trial random stream. The state is seeded by avalanching
/// (master_seed, trial_index), so trial i's draws depend only on that pair
/// and never on how trials are partitioned across workers. Successive
/// outputs walk a Weyl sequence through the splitmix64 finalizer.
class TrialRng {
  public:
    TrialRng(std::uint64_t master_seed, std::uint64_t trial_index) {
        state_ = mix(mix(master_seed ^ 0x6a09e667f3bcc909ULL) +
                     (trial_index + 1) * 0xd1b54a32d192ed03ULL);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform on the open interval (0, 1).
    double next_unit_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard real Gaussian via Box-Muller; the paired value is cached.
    double next_gauss() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_gauss_;
        }
        const double u1 = next_unit_open();
        const double u2 = next_unit_open();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * kPi * u2;
        cached_gauss_ = mag * std::sin(ang);
        has_cached_ = true;
        return mag * std::cos(ang);
    }

    /// Circularly symmetric complex Gaussian with unit variance, i.e. real
    /// and imaginary parts are independent N(0, 1/2).
    std::complex<double> next_cgauss() {
        constexpr double half_sqrt2 = 0.7071067811865476;
        const double re = next_gauss() * half_sqrt2;
        const double im = next_gauss() * half_sqrt2;
        return {re, im};
    }

  private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_ = 0;
    double cached_gauss_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace relaydmt
