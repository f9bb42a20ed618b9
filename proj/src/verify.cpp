#include "cogsec/verify.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "cogsec/analytic.hpp"
#include "cogsec/rng.hpp"

namespace cogsec {
namespace verify {

namespace {

double z_score(double estimate, double analytic, double std_error) {
    if (std_error > 0.0) return (estimate - analytic) / std_error;
    return estimate == analytic ? 0.0 : std::numeric_limits<double>::infinity();
}

CheckResult match_check(std::string name, double analytic,
                        const mc::EstimateResult& est) {
    CheckResult r;
    r.name = std::move(name);
    r.kind = CheckKind::Match;
    r.analytic = analytic;
    r.estimate = est.value;
    r.std_error = est.std_error;
    r.z = z_score(est.value, analytic, est.std_error);
    r.pass = std::fabs(r.z) <= 3.0;
    return r;
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

VerifyReport run_verify(const SystemConfig& config, std::uint64_t trials,
                        std::uint64_t master_seed, const mc::RunOptions& options) {
    config.validate();
    VerifyReport report;
    std::uint64_t seed = master_seed;
    auto next_seed = [&seed] { return splitmix64(seed); };

    // Closed-form intercept probability of the proposed scheduling vs MC.
    {
        const double closed = analytic::intercept_proposed_closed(config);
        const auto est = mc::estimate_intercept(config, Scheme::Proposed, trials,
                                                next_seed(), options);
        report.checks.push_back(match_check("proposed_closed_vs_mc", closed, est));
    }

    // Single-user scenario derived from user 0 for the M=1 results.
    const SystemConfig single = config.restricted_to_user(0);
    {
        const double closed = analytic::intercept_traditional_m1(single);
        const auto est = mc::estimate_intercept(single, Scheme::Traditional, trials,
                                                next_seed(), options);
        report.checks.push_back(match_check("traditional_m1_closed_vs_mc", closed, est));
    }
    {
        const double bound = analytic::intercept_an_upper_bound_m1(single);
        const auto est = mc::estimate_intercept(single, Scheme::ArtificialNoise, trials,
                                                next_seed(), options);
        CheckResult r;
        r.name = "an_intercept_below_traditional_bound_m1";
        r.kind = CheckKind::UpperBound;
        r.analytic = bound;
        r.estimate = est.value;
        r.std_error = est.std_error;
        r.z = z_score(bound, est.value, est.std_error);
        r.pass = r.z > 3.0;
        report.checks.push_back(r);
    }

    // Power-law approximation against the exact closed form at high MER.
    {
        SystemConfig high_mer = config;
        high_mer.lambda_me = 1e6;
        const double exact = analytic::intercept_proposed_closed(high_mer);
        const double asym = analytic::intercept_proposed_asymptotic(high_mer);
        CheckResult r;
        r.name = "asymptotic_ratio_at_60db";
        r.kind = CheckKind::Ratio;
        r.analytic = exact;
        r.estimate = asym;
        r.std_error = 0.0;
        r.z = 0.0;
        const double ratio = asym / exact;
        r.pass = ratio >= 0.99 && ratio <= 1.01;
        report.checks.push_back(r);
    }

    // Analytic wiretap-ratio moments vs sample moments (user 0).
    {
        const double mean_t = analytic::moment_t_mean(config, 0);
        const auto est =
            mc::estimate_moment_t(config, 0, 1, trials, next_seed(), options);
        report.checks.push_back(match_check("moment_t_mean_vs_sample", mean_t, est));
    }
    {
        const double mean_t_sq = analytic::moment_t_sq_mean(config, 0);
        const auto est =
            mc::estimate_moment_t(config, 0, 2, trials, next_seed(), options);
        report.checks.push_back(
            match_check("moment_t_sq_mean_vs_sample", mean_t_sq, est));
    }

    return report;
}

void print_report(std::ostream& out, const VerifyReport& report) {
    for (const auto& c : report.checks) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.name
            << "  analytic=" << c.analytic << "  estimate=" << c.estimate
            << "  std_error=" << c.std_error << "  z=" << c.z << '\n';
    }
    out << (report.all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
}

}  // namespace verify
}  // namespace cogsec
