#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cogsec/config.hpp"

namespace cogsec {
namespace analytic {

// Largest eavesdropper count for which the 2^N - 1 subset expansion is
// evaluated directly; beyond this callers must fall back to Monte Carlo.
inline constexpr int kMaxSubsetEves = 24;

// One term of the inclusion-exclusion expansion over nonempty eavesdropper
// subsets: sign = (-1)^(|members|+1).
struct SubsetTerm {
    std::vector<int> members;
    int sign;  // +1 iff |members| is odd
};

std::vector<SubsetTerm> enumerate_subsets(int n_eves);

// Probability that a single user's main-link SNR ratio falls below the best
// wiretap ratio, via the subset expansion. Result clamped to [0, 1].
double per_user_intercept_term(const SystemConfig& config, int user);

// Closed-form intercept probability of the secrecy-optimal scheduling scheme:
// product of per-user terms.
double intercept_proposed_closed(const SystemConfig& config);

// Closed form for the rate-optimal scheme, available only at M = 1 where it
// coincides with the single-user term. Throws for m_users != 1.
double intercept_traditional_m1(const SystemConfig& config);

// Upper bound on the artificial-noise intercept probability at M = 1; equals
// intercept_traditional_m1. Throws for m_users != 1.
double intercept_an_upper_bound_m1(const SystemConfig& config);

// High-MER power-law approximation of intercept_proposed_closed, exact up to
// O(1/lambda_me) relative error.
double intercept_proposed_asymptotic(const SystemConfig& config);

// Mean of t = N_b * X / sigma_ib^2 with X the best wiretap ratio of `user`.
double moment_t_mean(const SystemConfig& config, int user);

// Mean of t^2.
double moment_t_sq_mean(const SystemConfig& config, int user);

struct DiversityFit {
    double slope = 0.0;      // log10(p) per log10(lambda_me)
    double intercept = 0.0;  // log10(p) at log10(lambda_me) = 0
    std::vector<double> mer_grid_db;
    double residual = 0.0;  // max |log10 deviation| from the fitted line

    double diversity_order() const { return -slope; }
};

// Ordinary least squares on (log10 lambda_me, log10 p). Requires >= 3 points,
// strictly increasing lambda_me, probabilities in (0, 1).
DiversityFit diversity_fit(const std::vector<std::pair<double, double>>& prob_at_mer);

}  // namespace analytic
}  // namespace cogsec
