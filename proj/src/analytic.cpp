#include "cogsec/analytic.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace cogsec {
namespace analytic {

namespace {

void check_n_eves(int n_eves) {
    if (n_eves < 1) throw std::invalid_argument("n_eves must be >= 1");
    if (n_eves > kMaxSubsetEves) {
        throw std::invalid_argument(
            "subset expansion refused for n_eves > 24; use Monte Carlo");
    }
}

// Inclusion-exclusion sum over nonempty subsets: for each subset with ratio
// sum S = sum_{j in subset} ratio[j], adds (-1)^(|subset|+1) * f(S).
// Positive and negative terms accumulate separately to limit cancellation.
template <typename TermFn>
double subset_sum(const std::vector<double>& ratios, TermFn&& term) {
    const int n = static_cast<int>(ratios.size());
    long double positive = 0.0L;
    long double negative = 0.0L;
    const std::uint32_t last = (1u << n) - 1;
    for (std::uint32_t mask = 1; mask <= last; ++mask) {
        double s = 0.0;
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
            s += ratios[std::countr_zero(bits)];
        }
        const double value = term(s);
        if (std::popcount(mask) & 1u) {
            positive += value;
        } else {
            negative += value;
        }
    }
    return static_cast<double>(positive - negative);
}

std::vector<double> sigma_ratios(const SystemConfig& c, int user) {
    // N_ej sigma_ib^2 / (N_b sigma_iej^2)
    std::vector<double> r(static_cast<std::size_t>(c.n_eves));
    const double sigma_ib_sq = c.sigma_main_sq(user);
    for (int j = 0; j < c.n_eves; ++j) {
        r[j] = c.noise_eve[j] * sigma_ib_sq / (c.noise_cbs * c.sigma_eve_sq(user, j));
    }
    return r;
}

std::vector<double> theta_ratios(const SystemConfig& c, int user) {
    // N_ej theta_ib / (N_b theta_iej); the MER factors out of these.
    std::vector<double> r(static_cast<std::size_t>(c.n_eves));
    for (int j = 0; j < c.n_eves; ++j) {
        r[j] = c.noise_eve[j] * c.theta_main[user] /
               (c.noise_cbs * c.theta_eve[user][j]);
    }
    return r;
}

double clamp01(double p) { return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p); }

}  // namespace

std::vector<SubsetTerm> enumerate_subsets(int n_eves) {
    check_n_eves(n_eves);
    std::vector<SubsetTerm> terms;
    const std::uint32_t last = (1u << n_eves) - 1;
    terms.reserve(last);
    for (std::uint32_t mask = 1; mask <= last; ++mask) {
        SubsetTerm term;
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
            term.members.push_back(std::countr_zero(bits));
        }
        term.sign = (std::popcount(mask) & 1u) ? +1 : -1;
        terms.push_back(std::move(term));
    }
    return terms;
}

double per_user_intercept_term(const SystemConfig& config, int user) {
    check_n_eves(config.n_eves);
    const auto ratios = sigma_ratios(config, user);
    return clamp01(subset_sum(ratios, [](double s) { return 1.0 / (1.0 + s); }));
}

double intercept_proposed_closed(const SystemConfig& config) {
    double product = 1.0;
    for (int i = 0; i < config.m_users; ++i) {
        product *= per_user_intercept_term(config, i);
    }
    return product;
}

double intercept_traditional_m1(const SystemConfig& config) {
    if (config.m_users != 1) {
        throw std::invalid_argument(
            "traditional closed form is available only for m_users = 1");
    }
    return per_user_intercept_term(config, 0);
}

double intercept_an_upper_bound_m1(const SystemConfig& config) {
    if (config.m_users != 1) {
        throw std::invalid_argument(
            "artificial-noise intercept bound is available only for m_users = 1");
    }
    return intercept_traditional_m1(config);
}

double intercept_proposed_asymptotic(const SystemConfig& config) {
    check_n_eves(config.n_eves);
    double product = 1.0;
    for (int i = 0; i < config.m_users; ++i) {
        const auto ratios = theta_ratios(config, i);
        product *= subset_sum(ratios, [](double s) { return 1.0 / s; });
        product /= config.lambda_me;
    }
    return product;
}

double moment_t_mean(const SystemConfig& config, int user) {
    check_n_eves(config.n_eves);
    const auto ratios = theta_ratios(config, user);
    return subset_sum(ratios, [](double s) { return 1.0 / s; }) / config.lambda_me;
}

double moment_t_sq_mean(const SystemConfig& config, int user) {
    check_n_eves(config.n_eves);
    const auto ratios = theta_ratios(config, user);
    const double sum = subset_sum(ratios, [](double s) { return 1.0 / (s * s); });
    return 2.0 * sum / (config.lambda_me * config.lambda_me);
}

DiversityFit diversity_fit(const std::vector<std::pair<double, double>>& prob_at_mer) {
    if (prob_at_mer.size() < 3) {
        throw std::invalid_argument("diversity fit needs >= 3 points");
    }
    double prev = 0.0;
    for (const auto& [mer, p] : prob_at_mer) {
        if (mer <= prev) {
            throw std::invalid_argument("lambda_me grid must be strictly increasing");
        }
        if (p <= 0.0 || p >= 1.0) {
            throw std::invalid_argument("probabilities must lie in (0, 1)");
        }
        prev = mer;
    }

    const std::size_t n = prob_at_mer.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::vector<double> xs(n), ys(n);
    for (std::size_t k = 0; k < n; ++k) {
        xs[k] = std::log10(prob_at_mer[k].first);
        ys[k] = std::log10(prob_at_mer[k].second);
        sx += xs[k];
        sy += ys[k];
        sxx += xs[k] * xs[k];
        sxy += xs[k] * ys[k];
    }
    const double dn = static_cast<double>(n);
    const double denom = dn * sxx - sx * sx;

    DiversityFit fit;
    fit.slope = (dn * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / dn;
    fit.mer_grid_db.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        fit.mer_grid_db[k] = 10.0 * xs[k];
        const double dev = std::fabs(ys[k] - (fit.intercept + fit.slope * xs[k]));
        if (dev > fit.residual) fit.residual = dev;
    }
    return fit;
}

}  // namespace analytic
}  // namespace cogsec
