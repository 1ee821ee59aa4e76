#include "awrpsim/sim.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include "awrpsim/metrics.hpp"

namespace awrpsim {

SimResult simulate(const Trace &trace, PolicyKind kind, const CacheConfig &config,
                   const StepObserver &observer) {
    config.validate();
    const std::uint64_t sets = config.num_sets;
    const std::size_t ways = config.associativity();

    std::vector<BlockId> blocks;
    blocks.reserve(trace.size());
    for (const BlockId raw : trace.blocks()) blocks.push_back(block_of(raw, config.block_size_log2));

    std::vector<std::unique_ptr<Policy>> per_set(sets);
    if (is_offline(kind)) {
        std::vector<std::vector<BlockId>> streams(sets);
        for (const BlockId b : blocks) streams[set_index(b, sets)].push_back(b);
        for (std::uint64_t s = 0; s < sets; ++s) {
            per_set[s] = make_offline_policy(ways, std::move(streams[s]));
        }
    } else {
        for (auto &p : per_set) p = make_policy(kind, ways);
    }

    SimResult result;
    result.policy = kind;
    result.config = config;
    for (std::size_t step = 0; step < blocks.size(); ++step) {
        const BlockId b = blocks[step];
        const std::uint64_t s = set_index(b, sets);
        const auto outcome = per_set[s]->access(b);
        if (outcome.is_hit()) {
            ++result.hits;
        } else {
            ++result.misses;
            if (outcome.evicted) ++result.evictions;
        }
        if (observer) observer(step, s, b, outcome);
    }
    result.hit_ratio_percent = hit_ratio(result.hits, result.accesses());
    return result;
}

std::size_t ComparisonTable::policy_row(PolicyKind kind) const {
    const auto it = std::find(policies.begin(), policies.end(), kind);
    if (it == policies.end()) {
        throw std::out_of_range("policy " + std::string(policy_name(kind)) + " not in table");
    }
    return static_cast<std::size_t>(it - policies.begin());
}

std::size_t ComparisonTable::capacity_column(std::uint64_t capacity) const {
    const auto it = std::find(capacities.begin(), capacities.end(), capacity);
    if (it == capacities.end()) {
        throw std::out_of_range("capacity " + std::to_string(capacity) + " not in table");
    }
    return static_cast<std::size_t>(it - capacities.begin());
}

double ComparisonTable::ratio(PolicyKind kind, std::uint64_t capacity) const {
    return ratios[policy_row(kind)][capacity_column(capacity)];
}

ComparisonTable sweep(const Trace &trace, const std::vector<PolicyKind> &kinds,
                      const std::vector<std::uint64_t> &capacities, const CacheConfig &base,
                      unsigned jobs) {
    struct Cell {
        std::size_t row, col;
        CacheConfig config;
    };
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < kinds.size(); ++r) {
        for (std::size_t c = 0; c < capacities.size(); ++c) {
            CacheConfig cfg = base;
            cfg.capacity = capacities[c];
            try {
                cfg.validate();
            } catch (const ConfigError &e) {
                throw ConfigError(std::string(policy_name(kinds[r])) + " at capacity " +
                                  std::to_string(capacities[c]) + ": " + e.what());
            }
            cells.push_back({r, c, cfg});
        }
    }

    ComparisonTable table;
    table.trace_name = trace.name();
    table.base = base;
    table.policies = kinds;
    table.capacities = capacities;
    table.ratios.assign(kinds.size(), std::vector<double>(capacities.size(), 0.0));
    table.results.assign(kinds.size(), std::vector<SimResult>(capacities.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const auto &cell = cells[i];
            try {
                auto res = simulate(trace, kinds[cell.row], cell.config);
                table.ratios[cell.row][cell.col] = res.hit_ratio_percent;
                table.results[cell.row][cell.col] = res;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const unsigned n = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return table;
}

} // namespace awrpsim
