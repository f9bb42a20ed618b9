#pragma once

#include <complex>
#include <vector>

#include "cogsec/config.hpp"
#include "cogsec/rng.hpp"

namespace cogsec {

// One joint draw of all fading coefficients. g-fields cache the squared
// magnitudes of the h-fields and are guaranteed strictly positive
// (zero-magnitude draws are resampled).
struct ChannelRealization {
    std::vector<std::complex<double>> h_main;     // CU_i -> CBS
    std::vector<std::complex<double>> h_primary;  // CU_i -> PR
    std::vector<std::complex<double>> h_eve;      // CU_i -> E_j, row-major [i*n + j]
    std::vector<double> g_main;
    std::vector<double> g_primary;
    std::vector<double> g_eve;
    int n_eves = 0;

    std::complex<double> h_eve_at(int user, int eve) const {
        return h_eve[static_cast<std::size_t>(user) * n_eves + eve];
    }
    double g_eve_at(int user, int eve) const {
        return g_eve[static_cast<std::size_t>(user) * n_eves + eve];
    }
};

ChannelRealization sample_realization(const SystemConfig& config, RandomStream& rng);

// Allocation-free variant for tight Monte Carlo loops.
void sample_realization_into(const SystemConfig& config, RandomStream& rng,
                             ChannelRealization& out);

}  // namespace cogsec
