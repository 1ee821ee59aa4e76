#pragma once

#include <functional>
#include <string>
#include <vector>

#include "awrpsim/core.hpp"
#include "awrpsim/policy.hpp"

namespace awrpsim {

struct SimResult {
    PolicyKind policy = PolicyKind::LRU;
    CacheConfig config;
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t evictions = 0;
    double hit_ratio_percent = 0.0;

    std::uint64_t accesses() const noexcept { return hits + misses; }

    friend bool operator==(const SimResult &, const SimResult &) = default;
};

/// Set a block maps to: block mod num_sets.
constexpr std::uint64_t set_index(BlockId block, std::uint64_t num_sets) noexcept {
    return num_sets <= 1 ? 0 : block % num_sets;
}

/// Called once per access, in trace order.
using StepObserver =
    std::function<void(std::size_t step, std::uint64_t set, BlockId block, const AccessOutcome &)>;

/**
 * Runs `trace` through one policy instance per set, each holding
 * capacity / num_sets blocks. Trace entries are mapped through
 * block_of(entry, config.block_size_log2) before set selection.
 *
 * Online policies see one access at a time. OPT instances are built from
 * their set's filtered reference stream.
 *
 * Throws ConfigError for invalid geometry before simulating anything.
 */
SimResult simulate(const Trace &trace, PolicyKind kind, const CacheConfig &config,
                   const StepObserver &observer = {});

/// Hit ratios for every (policy, capacity) pair of a sweep.
struct ComparisonTable {
    std::string trace_name;
    CacheConfig base;
    std::vector<PolicyKind> policies;
    std::vector<std::uint64_t> capacities;
    /// ratios[p][c] is the hit ratio of policies[p] at capacities[c].
    std::vector<std::vector<double>> ratios;
    /// Full results in the same layout; empty for tables read back from csv.
    std::vector<std::vector<SimResult>> results;

    double ratio(PolicyKind kind, std::uint64_t capacity) const;
    std::size_t policy_row(PolicyKind kind) const;
    std::size_t capacity_column(std::uint64_t capacity) const;
};

/**
 * Simulates the cross-product of `kinds` and `capacities` with the geometry
 * of `base` (its capacity field is ignored). Cells may run on up to `jobs`
 * threads; the table does not depend on scheduling.
 *
 * Throws ConfigError naming the offending policy and capacity.
 */
ComparisonTable sweep(const Trace &trace, const std::vector<PolicyKind> &kinds,
                      const std::vector<std::uint64_t> &capacities, const CacheConfig &base,
                      unsigned jobs = 1);

/// The capacities of the published comparison table.
inline const std::vector<std::uint64_t> kDefaultCapacities = {30, 60, 90, 120, 150, 180, 210};
/// The policies of the published comparison table.
inline const std::vector<PolicyKind> kDefaultPolicies = {PolicyKind::LRU, PolicyKind::FIFO,
                                                         PolicyKind::CAR, PolicyKind::AWRP};

} // namespace awrpsim
