#include "cogsec/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "cogsec/channel.hpp"
#include "cogsec/rng.hpp"

namespace cogsec {
namespace mc {

namespace {

unsigned resolve_threads(const RunOptions& options, std::uint64_t n_blocks) {
    unsigned t = options.threads;
    if (t == 0) t = std::thread::hardware_concurrency();
    if (t == 0) t = 1;
    if (t > n_blocks) t = static_cast<unsigned>(n_blocks);
    return t;
}

// Runs fn(block_index, block_trials, rng) for every block. Each block owns
// the substream (master_seed, block_index) and writes only its own slot, so
// results do not depend on how blocks are scheduled across workers.
template <typename BlockFn>
void for_each_block(std::uint64_t trials, std::uint64_t master_seed,
                    const RunOptions& options, BlockFn&& fn) {
    const std::uint64_t n_blocks = (trials + kBlockTrials - 1) / kBlockTrials;
    const unsigned threads = resolve_threads(options, n_blocks);

    auto run_block = [&](std::uint64_t block) {
        const std::uint64_t begin = block * kBlockTrials;
        const std::uint64_t count = std::min(kBlockTrials, trials - begin);
        RandomStream rng(master_seed, block);
        fn(block, count, rng);
    };

    if (threads <= 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) run_block(b);
        return;
    }

    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t b = next.fetch_add(1);
                if (b >= n_blocks) return;
                run_block(b);
            }
        });
    }
    for (auto& th : pool) th.join();
}

struct MeanAccum {
    double sum = 0.0;
    double sum_sq = 0.0;
};

// Per-trial value sampler -> (mean, standard error). Block sums are merged
// in block order with compensated summation, identically for any worker
// count.
template <typename TrialFn>
EstimateResult estimate_mean(Metric metric, Scheme scheme, std::uint64_t trials,
                             std::uint64_t master_seed, const RunOptions& options,
                             TrialFn&& trial) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const std::uint64_t n_blocks = (trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<MeanAccum> blocks(n_blocks);

    for_each_block(trials, master_seed, options,
                   [&](std::uint64_t block, std::uint64_t count, RandomStream& rng) {
                       MeanAccum acc;
                       for (std::uint64_t k = 0; k < count; ++k) {
                           const double v = trial(rng);
                           acc.sum += v;
                           acc.sum_sq += v * v;
                       }
                       blocks[block] = acc;
                   });

    double sum = 0.0, sum_c = 0.0;
    double sum_sq = 0.0, sum_sq_c = 0.0;
    auto kahan_add = [](double& total, double& comp, double v) {
        const double y = v - comp;
        const double t = total + y;
        comp = (t - total) - y;
        total = t;
    };
    for (const auto& b : blocks) {
        kahan_add(sum, sum_c, b.sum);
        kahan_add(sum_sq, sum_sq_c, b.sum_sq);
    }

    const double n = static_cast<double>(trials);
    const double mean = sum / n;
    double variance = 0.0;
    if (trials > 1) {
        variance = (sum_sq - n * mean * mean) / (n - 1.0);
        if (variance < 0.0) variance = 0.0;
    }

    EstimateResult result;
    result.metric = metric;
    result.scheme = scheme;
    result.value = mean;
    result.std_error = std::sqrt(variance / n);
    result.trials = trials;
    result.master_seed = master_seed;
    return result;
}

SchemeOutcome run_scheme(const SystemConfig& config, const ChannelRealization& real,
                         Scheme scheme) {
    switch (scheme) {
        case Scheme::Proposed: return schedule_proposed(config, real);
        case Scheme::Traditional: return schedule_traditional(config, real);
        case Scheme::ArtificialNoise: return artificial_noise_rates(config, real);
    }
    throw std::invalid_argument("unknown scheme");
}

}  // namespace

const char* metric_name(Metric metric) {
    return metric == Metric::ErgodicSecrecyRate ? "secrecy_rate"
                                                : "intercept_probability";
}

EstimateResult estimate_secrecy_rate(const SystemConfig& config, Scheme scheme,
                                     std::uint64_t trials, std::uint64_t master_seed,
                                     const RunOptions& options) {
    config.validate();
    return estimate_mean(Metric::ErgodicSecrecyRate, scheme, trials, master_seed,
                         options, [&](RandomStream& rng) {
                             thread_local ChannelRealization real;
                             sample_realization_into(config, rng, real);
                             return run_scheme(config, real, scheme).secrecy_rate;
                         });
}

EstimateResult estimate_intercept(const SystemConfig& config, Scheme scheme,
                                  std::uint64_t trials, std::uint64_t master_seed,
                                  const RunOptions& options) {
    config.validate();
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    const std::uint64_t n_blocks = (trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<std::uint64_t> counts(n_blocks, 0);

    for_each_block(trials, master_seed, options,
                   [&](std::uint64_t block, std::uint64_t count, RandomStream& rng) {
                       thread_local ChannelRealization real;
                       std::uint64_t hits = 0;
                       for (std::uint64_t k = 0; k < count; ++k) {
                           sample_realization_into(config, rng, real);
                           if (run_scheme(config, real, scheme).intercept) ++hits;
                       }
                       counts[block] = hits;
                   });

    std::uint64_t hits = 0;
    for (std::uint64_t c : counts) hits += c;

    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;

    EstimateResult result;
    result.metric = Metric::InterceptProbability;
    result.scheme = scheme;
    result.value = p;
    result.std_error = std::sqrt(p * (1.0 - p) / n);
    result.trials = trials;
    result.master_seed = master_seed;
    result.unresolved = static_cast<double>(hits) < kUnresolvedCountThreshold;
    return result;
}

EstimateResult estimate_moment_t(const SystemConfig& config, int user, int power,
                                 std::uint64_t trials, std::uint64_t master_seed,
                                 const RunOptions& options) {
    config.validate();
    if (power != 1 && power != 2) throw std::invalid_argument("power must be 1 or 2");

    const double sigma_ib_sq = config.sigma_main_sq(user);
    return estimate_mean(
        Metric::ErgodicSecrecyRate, Scheme::Proposed, trials, master_seed, options,
        [&, user, power](RandomStream& rng) {
            double best = 0.0;
            for (int j = 0; j < config.n_eves; ++j) {
                const double z =
                    -config.sigma_eve_sq(user, j) * std::log(rng.next_uniform_pos());
                const double v = z / config.noise_eve[j];
                if (v > best) best = v;
            }
            const double t = config.noise_cbs * best / sigma_ib_sq;
            return power == 1 ? t : t * t;
        });
}

std::vector<SweepRow> run_sweep(const SystemConfig& base_config,
                                const std::vector<Scheme>& schemes,
                                const std::vector<double>& mer_grid_db,
                                const std::vector<Metric>& metrics,
                                std::uint64_t trials, std::uint64_t master_seed,
                                const RunOptions& options) {
    std::vector<SweepRow> rows;
    for (std::size_t g = 0; g < mer_grid_db.size(); ++g) {
        SystemConfig config = base_config;
        config.lambda_me = std::pow(10.0, mer_grid_db[g] / 10.0);
        try {
            config.validate();
        } catch (const ConfigError& e) {
            throw ConfigError("grid point " + std::to_string(g) + ": " + e.what());
        }

        for (std::size_t s = 0; s < schemes.size(); ++s) {
            for (std::size_t m = 0; m < metrics.size(); ++m) {
                std::uint64_t tag = (static_cast<std::uint64_t>(g) << 16) |
                                    (static_cast<std::uint64_t>(s) << 8) | m;
                std::uint64_t state =
                    master_seed ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
                const std::uint64_t point_seed = splitmix64(state);

                EstimateResult est =
                    metrics[m] == Metric::ErgodicSecrecyRate
                        ? estimate_secrecy_rate(config, schemes[s], trials, point_seed,
                                                options)
                        : estimate_intercept(config, schemes[s], trials, point_seed,
                                             options);

                rows.push_back({schemes[s], config.m_users, config.n_eves,
                                mer_grid_db[g], metrics[m], est.value, est.std_error,
                                trials, master_seed, est.unresolved});
            }
        }
    }
    return rows;
}

}  // namespace mc
}  // namespace cogsec
