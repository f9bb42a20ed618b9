#include "cogsec/channel.hpp"

namespace cogsec {

namespace {

// Draws until the squared magnitude is strictly positive. A zero draw is only
// possible through floating-point underflow, but downstream formulas divide
// by these magnitudes.
std::complex<double> draw_positive(RandomStream& rng, double variance,
                                   double& g_out) {
    for (;;) {
        std::complex<double> h = rng.next_complex_gaussian(variance);
        const double g = std::norm(h);
        if (g > 0.0) {
            g_out = g;
            return h;
        }
    }
}

}  // namespace

void sample_realization_into(const SystemConfig& config, RandomStream& rng,
                             ChannelRealization& out) {
    const int m = config.m_users;
    const int n = config.n_eves;
    out.n_eves = n;
    out.h_main.resize(static_cast<std::size_t>(m));
    out.h_primary.resize(static_cast<std::size_t>(m));
    out.h_eve.resize(static_cast<std::size_t>(m) * n);
    out.g_main.resize(static_cast<std::size_t>(m));
    out.g_primary.resize(static_cast<std::size_t>(m));
    out.g_eve.resize(static_cast<std::size_t>(m) * n);

    for (int i = 0; i < m; ++i) {
        out.h_main[i] = draw_positive(rng, config.sigma_main_sq(i), out.g_main[i]);
        out.h_primary[i] = draw_positive(rng, config.sigma_ip_sq[i], out.g_primary[i]);
        for (int j = 0; j < n; ++j) {
            const std::size_t k = static_cast<std::size_t>(i) * n + j;
            out.h_eve[k] = draw_positive(rng, config.sigma_eve_sq(i, j), out.g_eve[k]);
        }
    }
}

ChannelRealization sample_realization(const SystemConfig& config, RandomStream& rng) {
    ChannelRealization real;
    sample_realization_into(config, rng, real);
    return real;
}

}  // namespace cogsec
