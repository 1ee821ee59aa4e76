#include "awrpsim/awrp.hpp"

#include <algorithm>
#include <string>

namespace awrpsim {

double awrp_weight(std::uint64_t freq, std::uint64_t recency, std::uint64_t clock_n) {
    if (clock_n <= recency) {
        throw ContractViolation("awrp_weight: clock " + std::to_string(clock_n) +
                                " must exceed recency " + std::to_string(recency));
    }
    return static_cast<double>(freq) / static_cast<double>(clock_n - recency);
}

BlockId awrp_select_victim(std::span<AwrpEntry> residents, std::uint64_t clock_n) {
    if (residents.empty()) {
        throw ContractViolation("awrp_select_victim: empty resident set");
    }
    for (auto &e : residents) {
        e.weight = awrp_weight(e.freq, e.recency, clock_n);
    }
    // Weights are ratios of small integers, so exact comparison is sound.
    const auto best = std::min_element(residents.begin(), residents.end(),
                                       [](const AwrpEntry &a, const AwrpEntry &b) {
                                           if (a.weight != b.weight) return a.weight < b.weight;
                                           if (a.recency != b.recency) return a.recency < b.recency;
                                           return a.block < b.block;
                                       });
    return best->block;
}

AwrpPolicy::AwrpPolicy(std::size_t capacity) : Policy(capacity) {
    entries_.reserve(capacity);
    index_.reserve(capacity);
}

std::vector<BlockId> AwrpPolicy::residents() const {
    std::vector<BlockId> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) out.push_back(e.block);
    std::sort(out.begin(), out.end());
    return out;
}

const AwrpEntry *AwrpPolicy::entry(BlockId block) const {
    const auto it = index_.find(block);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

void AwrpPolicy::insert(BlockId block) {
    index_.emplace(block, entries_.size());
    entries_.push_back(AwrpEntry{block, 1, clock(), 0.0});
}

AccessOutcome AwrpPolicy::on_access(BlockId block) {
    if (const auto it = index_.find(block); it != index_.end()) {
        auto &e = entries_[it->second];
        ++e.freq;
        e.recency = clock();
        return AccessOutcome::hit();
    }
    if (!full()) {
        insert(block);
        return AccessOutcome::cold_miss();
    }

    const BlockId victim = awrp_select_victim(entries_, clock());
    const std::size_t slot = index_.at(victim);
    index_.erase(victim);
    if (slot != entries_.size() - 1) {
        entries_[slot] = entries_.back();
        index_[entries_[slot].block] = slot;
    }
    entries_.pop_back();
    insert(block);
    return AccessOutcome::capacity_miss(victim);
}

} // namespace awrpsim
