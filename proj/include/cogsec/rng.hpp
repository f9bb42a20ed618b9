#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace cogsec {

// splitmix64, used only to expand seeds into generator state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ with explicit, platform-independent sampling helpers.
// Substreams are derived from (master_seed, stream_id), which is what makes
// blocked Monte Carlo runs reproducible regardless of worker count.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) { reseed(seed, 0); }
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_id) {
        reseed(master_seed, stream_id);
    }

    void reseed(std::uint64_t master_seed, std::uint64_t stream_id) {
        std::uint64_t sm = master_seed ^ (0x6a09e667f3bcc909ULL * (stream_id + 1));
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on (0, 1]; never returns 0 so log() is always finite.
    double next_uniform_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on [0, 1).
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Circularly-symmetric complex Gaussian with E|h|^2 = variance.
    // Polar form: |h|^2 is exactly exponential with the given mean.
    std::complex<double> next_complex_gaussian(double variance) {
        const double radius = std::sqrt(-variance * std::log(next_uniform_pos()));
        const double phase = 6.283185307179586476925286766559 * next_uniform();
        return {radius * std::cos(phase), radius * std::sin(phase)};
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace cogsec
