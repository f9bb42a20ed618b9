#include "cogsec/schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace cogsec {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;

double log2_1p(double x) { return std::log1p(x) / kLn2; }

// Main-link SNR argument: I |h_ib|^2 / (|h_ip|^2 N_b).
double main_snr(const SystemConfig& c, const ChannelRealization& r, int user) {
    return c.interference_cap * r.g_main[user] / (r.g_primary[user] * c.noise_cbs);
}

double eve_snr(const SystemConfig& c, const ChannelRealization& r, int user, int eve) {
    return c.interference_cap * r.g_eve_at(user, eve) /
           (r.g_primary[user] * c.noise_eve[eve]);
}

// Best wiretap ratio max_j |h_ie_j|^2 / N_ej; shared by both scheduling
// schemes' intercept events, which do not depend on I or |h_ip|^2.
double best_eve_ratio(const SystemConfig& c, const ChannelRealization& r, int user) {
    double best = 0.0;
    for (int j = 0; j < c.n_eves; ++j) {
        const double v = r.g_eve_at(user, j) / c.noise_eve[j];
        if (v > best) best = v;
    }
    return best;
}

SchemeOutcome outcome_for_user(const SystemConfig& c, const ChannelRealization& r,
                               Scheme scheme, int user) {
    SchemeOutcome out;
    out.scheme = scheme;
    out.selected_user = user;
    out.rate_main = rate_main(c, r, user);
    out.rate_eve = rate_eve_max(c, r, user);
    const double diff = out.rate_main - out.rate_eve;
    out.secrecy_rate = diff > 0.0 ? diff : 0.0;
    // Equivalent to rate_main < rate_eve but exactly independent of I.
    out.intercept = r.g_main[user] / c.noise_cbs < best_eve_ratio(c, r, user);
    return out;
}

}  // namespace

const char* scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::Proposed: return "proposed";
        case Scheme::Traditional: return "traditional";
        case Scheme::ArtificialNoise: return "an";
    }
    return "?";
}

std::optional<Scheme> scheme_from_name(const std::string& name) {
    if (name == "proposed") return Scheme::Proposed;
    if (name == "traditional") return Scheme::Traditional;
    if (name == "an" || name == "artificial-noise") return Scheme::ArtificialNoise;
    return std::nullopt;
}

double transmit_power(const SystemConfig& config, const ChannelRealization& real,
                      int user) {
    return config.interference_cap / real.g_primary[user];
}

double rate_main(const SystemConfig& config, const ChannelRealization& real,
                 int user) {
    return log2_1p(main_snr(config, real, user));
}

double rate_eve(const SystemConfig& config, const ChannelRealization& real, int user,
                int eve) {
    return log2_1p(eve_snr(config, real, user, eve));
}

double rate_eve_max(const SystemConfig& config, const ChannelRealization& real,
                    int user) {
    double best_snr = 0.0;
    for (int j = 0; j < config.n_eves; ++j) {
        const double v = eve_snr(config, real, user, j);
        if (v > best_snr) best_snr = v;
    }
    return log2_1p(best_snr);
}

SchemeOutcome schedule_proposed(const SystemConfig& config,
                                const ChannelRealization& real) {
    int best = 0;
    double best_margin = 0.0;
    for (int i = 0; i < config.m_users; ++i) {
        const double margin = rate_main(config, real, i) - rate_eve_max(config, real, i);
        if (i == 0 || margin > best_margin) {
            best = i;
            best_margin = margin;
        }
    }
    return outcome_for_user(config, real, Scheme::Proposed, best);
}

SchemeOutcome schedule_traditional(const SystemConfig& config,
                                   const ChannelRealization& real) {
    // argmax of the main rate; |h_ib|^2 / |h_ip|^2 orders identically and
    // does not depend on I or N_b.
    int best = 0;
    double best_ratio = 0.0;
    for (int i = 0; i < config.m_users; ++i) {
        const double ratio = real.g_main[i] / real.g_primary[i];
        if (i == 0 || ratio > best_ratio) {
            best = i;
            best_ratio = ratio;
        }
    }
    return outcome_for_user(config, real, Scheme::Traditional, best);
}

SchemeOutcome artificial_noise_rates(const SystemConfig& config,
                                     const ChannelRealization& real) {
    const int m = config.m_users;
    const double two_m = 2.0 * m;
    const double cap = config.interference_cap;

    std::complex<double> beam_main{0.0, 0.0};
    for (int i = 0; i < m; ++i) {
        beam_main += real.h_main[i] / std::sqrt(real.g_primary[i]);
    }
    const double main_arg = cap * std::norm(beam_main) / (two_m * config.noise_cbs);

    double best_eve_arg = 0.0;
    for (int j = 0; j < config.n_eves; ++j) {
        std::complex<double> beam_eve{0.0, 0.0};
        for (int i = 0; i < m; ++i) {
            beam_eve += real.h_eve_at(i, j) / std::sqrt(real.g_primary[i]);
        }
        const double s = std::norm(beam_eve);
        const double arg = cap * s / (cap * s + two_m * config.noise_eve[j]);
        if (arg > best_eve_arg) best_eve_arg = arg;
    }

    SchemeOutcome out;
    out.scheme = Scheme::ArtificialNoise;
    out.selected_user = std::nullopt;
    out.rate_main = log2_1p(main_arg);
    out.rate_eve = log2_1p(best_eve_arg);
    const double diff = out.rate_main - out.rate_eve;
    out.secrecy_rate = diff > 0.0 ? diff : 0.0;
    out.intercept = main_arg < best_eve_arg;
    return out;
}

std::vector<std::complex<double>> construct_noise_vector(const SystemConfig& config,
                                                         const ChannelRealization& real,
                                                         RandomStream& rng) {
    const int m = config.m_users;
    if (m < 2) {
        throw std::invalid_argument(
            "construct_noise_vector requires m_users >= 2: the null constraint "
            "has no nonzero solution for a single user");
    }

    // a_i = sqrt(P_i / 2) h_main[i] with P_i = I / (M |h_ip|^2); the
    // constraint is the bilinear sum a . w = 0 (no conjugation).
    std::vector<std::complex<double>> a(static_cast<std::size_t>(m));
    double a_norm_sq = 0.0;
    for (int i = 0; i < m; ++i) {
        const double p_i = config.interference_cap / (m * real.g_primary[i]);
        a[i] = std::sqrt(p_i / 2.0) * real.h_main[i];
        a_norm_sq += std::norm(a[i]);
    }

    for (;;) {
        std::vector<std::complex<double>> w(static_cast<std::size_t>(m));
        for (auto& wi : w) wi = rng.next_complex_gaussian(1.0);

        // Remove the component along conj(a): afterwards sum_i a_i w_i = 0.
        std::complex<double> dot{0.0, 0.0};
        for (int i = 0; i < m; ++i) dot += a[i] * w[i];
        const std::complex<double> coeff = dot / a_norm_sq;
        double w_norm_sq = 0.0;
        for (int i = 0; i < m; ++i) {
            w[i] -= coeff * std::conj(a[i]);
            w_norm_sq += std::norm(w[i]);
        }
        if (w_norm_sq <= 0.0) continue;  // degenerate draw, retry

        const double scale = std::sqrt(m / w_norm_sq);  // mean |w_i|^2 = 1
        for (auto& wi : w) wi *= scale;
        return w;
    }
}

}  // namespace cogsec
