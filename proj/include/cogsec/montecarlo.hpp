#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cogsec/config.hpp"
#include "cogsec/schemes.hpp"

namespace cogsec {
namespace mc {

enum class Metric { ErgodicSecrecyRate, InterceptProbability };

const char* metric_name(Metric metric);

// Intercept estimates whose expected success count falls below this are
// reported but flagged unresolved.
inline constexpr double kUnresolvedCountThreshold = 10.0;

struct EstimateResult {
    Metric metric;
    Scheme scheme;
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    bool unresolved = false;  // intercept estimates only
};

struct RunOptions {
    // 0 = auto (hardware concurrency). Never affects numeric results.
    unsigned threads = 0;
};

// Trials are partitioned into fixed-size blocks; block k draws from the
// substream derived from (master_seed, k) and block sums are merged in block
// order, so serial and parallel runs produce identical estimates.
inline constexpr std::uint64_t kBlockTrials = 1 << 14;

EstimateResult estimate_secrecy_rate(const SystemConfig& config, Scheme scheme,
                                     std::uint64_t trials, std::uint64_t master_seed,
                                     const RunOptions& options = {});

EstimateResult estimate_intercept(const SystemConfig& config, Scheme scheme,
                                  std::uint64_t trials, std::uint64_t master_seed,
                                  const RunOptions& options = {});

// Sample moment of t^power (power 1 or 2) for Appendix-style cross-checks,
// where t = N_b * max_j(|h_ie_j|^2 / N_ej) / sigma_ib^2.
EstimateResult estimate_moment_t(const SystemConfig& config, int user, int power,
                                 std::uint64_t trials, std::uint64_t master_seed,
                                 const RunOptions& options = {});

struct SweepRow {
    Scheme scheme;
    int m_users;
    int n_eves;
    double lambda_me_db;
    Metric metric;
    double value;
    double std_error;
    std::uint64_t trials;
    std::uint64_t master_seed;
    bool unresolved;
};

// One row per (scheme, MER grid point, metric). Per-point seeds are derived
// from (master_seed, grid index, scheme, metric) so rows are independent of
// evaluation order.
std::vector<SweepRow> run_sweep(const SystemConfig& base_config,
                                const std::vector<Scheme>& schemes,
                                const std::vector<double>& mer_grid_db,
                                const std::vector<Metric>& metrics,
                                std::uint64_t trials, std::uint64_t master_seed,
                                const RunOptions& options = {});

}  // namespace mc
}  // namespace cogsec
