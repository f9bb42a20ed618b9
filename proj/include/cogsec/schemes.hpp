#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cogsec/channel.hpp"
#include "cogsec/config.hpp"
#include "cogsec/rng.hpp"

namespace cogsec {

enum class Scheme { Proposed, Traditional, ArtificialNoise };

const char* scheme_name(Scheme scheme);
std::optional<Scheme> scheme_from_name(const std::string& name);

// Per-realization result of one transmission scheme. Rates in bits/s/Hz.
struct SchemeOutcome {
    Scheme scheme;
    std::optional<int> selected_user;  // absent for the artificial-noise scheme
    double rate_main = 0.0;
    double rate_eve = 0.0;
    double secrecy_rate = 0.0;  // [rate_main - rate_eve]^+
    bool intercept = false;     // rate_main < rate_eve before clamping
};

double transmit_power(const SystemConfig& config, const ChannelRealization& real,
                      int user);
double rate_main(const SystemConfig& config, const ChannelRealization& real, int user);
double rate_eve(const SystemConfig& config, const ChannelRealization& real, int user,
                int eve);
double rate_eve_max(const SystemConfig& config, const ChannelRealization& real,
                    int user);

// Selects the user maximizing the (unclamped) secrecy-rate margin; ties go to
// the lowest index.
SchemeOutcome schedule_proposed(const SystemConfig& config,
                                const ChannelRealization& real);

// Selects the user maximizing the main-link rate, ignoring the wiretap links.
SchemeOutcome schedule_traditional(const SystemConfig& config,
                                   const ChannelRealization& real);

// Cooperative beamforming with half the power budget spent on artificial
// noise in the null space of the legitimate channel. The rate expressions are
// well defined for any M >= 1; an explicit noise vector exists only for
// M >= 2 (see construct_noise_vector).
SchemeOutcome artificial_noise_rates(const SystemConfig& config,
                                     const ChannelRealization& real);

// A nonzero noise vector w with sum_i sqrt(P_i/2) h_main[i] w_i = 0,
// normalized to mean |w_i|^2 = 1, direction randomized within the null space.
// Throws std::invalid_argument for m_users < 2.
std::vector<std::complex<double>> construct_noise_vector(const SystemConfig& config,
                                                         const ChannelRealization& real,
                                                         RandomStream& rng);

}  // namespace cogsec
