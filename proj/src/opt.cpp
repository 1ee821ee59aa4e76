#include "awrpsim/opt.hpp"

#include <algorithm>
#include <string>

namespace awrpsim {

std::vector<std::uint64_t> next_use_positions(std::span<const BlockId> stream) {
    std::vector<std::uint64_t> next(stream.size(), kNeverUsed);
    std::unordered_map<BlockId, std::uint64_t> seen;
    for (std::size_t i = stream.size(); i-- > 0;) {
        const auto [it, fresh] = seen.try_emplace(stream[i], i);
        if (!fresh) {
            next[i] = it->second;
            it->second = i;
        }
    }
    return next;
}

BlockId opt_select_victim(std::span<const BlockId> residents, std::span<const BlockId> future) {
    if (residents.empty()) {
        throw ContractViolation("opt_select_victim: empty resident set");
    }
    BlockId best = 0;
    std::uint64_t best_next = 0;
    bool first = true;
    for (const BlockId r : residents) {
        const auto it = std::find(future.begin(), future.end(), r);
        const std::uint64_t next =
            it == future.end() ? kNeverUsed : static_cast<std::uint64_t>(it - future.begin());
        if (first || next > best_next || (next == best_next && r < best)) {
            best = r;
            best_next = next;
            first = false;
        }
    }
    return best;
}

OptPolicy::OptPolicy(std::size_t capacity, std::vector<BlockId> stream)
    : Policy(capacity), stream_(std::move(stream)), next_use_(next_use_positions(stream_)) {}

std::vector<BlockId> OptPolicy::residents() const {
    std::vector<BlockId> out;
    out.reserve(next_of_.size());
    for (const auto &[id, _] : next_of_) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

AccessOutcome OptPolicy::on_access(BlockId block) {
    const std::uint64_t pos = clock() - 1;
    if (pos >= stream_.size() || stream_[pos] != block) {
        throw ContractViolation("OPT fed block " + std::to_string(block) + " at position " +
                                std::to_string(pos) + " outside its bound stream");
    }
    const std::uint64_t next = next_use_[pos];

    if (auto it = next_of_.find(block); it != next_of_.end()) {
        ranking_.erase({it->second, block});
        it->second = next;
        ranking_.insert({next, block});
        return AccessOutcome::hit();
    }
    auto outcome = AccessOutcome::cold_miss();
    if (full()) {
        const BlockId victim = ranking_.begin()->second;
        ranking_.erase(ranking_.begin());
        next_of_.erase(victim);
        outcome = AccessOutcome::capacity_miss(victim);
    }
    next_of_.emplace(block, next);
    ranking_.insert({next, block});
    return outcome;
}

} // namespace awrpsim
