#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cogsec/config.hpp"
#include "cogsec/montecarlo.hpp"

namespace cogsec {
namespace verify {

enum class CheckKind {
    Match,       // pass iff |z| <= 3
    UpperBound,  // pass iff estimate below analytic with margin > 3 SE (z > 3)
    Ratio,       // pass iff estimate/analytic within [0.99, 1.01]; z unused
};

struct CheckResult {
    std::string name;
    CheckKind kind;
    double analytic = 0.0;
    double estimate = 0.0;
    double std_error = 0.0;
    double z = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// Cross-validates the closed-form expressions against Monte Carlo on the
// given scenario: proposed closed form vs simulation, traditional M=1 closed
// form, artificial-noise upper bound, asymptotic/exact ratio at high MER, and
// the two analytic moments against sample moments.
VerifyReport run_verify(const SystemConfig& config, std::uint64_t trials,
                        std::uint64_t master_seed, const mc::RunOptions& options = {});

void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace verify
}  // namespace cogsec
