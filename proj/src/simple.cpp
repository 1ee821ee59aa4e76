#include "awrpsim/simple.hpp"

#include <algorithm>

namespace awrpsim {

namespace {

template <typename Range>
std::vector<BlockId> sorted_ids(const Range &range) {
    std::vector<BlockId> out(range.begin(), range.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

// LRU

std::vector<BlockId> LruPolicy::residents() const { return sorted_ids(order_); }

BlockId LruPolicy::victim() const {
    if (order_.empty()) throw ContractViolation("LRU victim requested from an empty cache");
    return order_.front();
}

AccessOutcome LruPolicy::on_access(BlockId block) {
    if (const auto it = where_.find(block); it != where_.end()) {
        order_.splice(order_.end(), order_, it->second);
        return AccessOutcome::hit();
    }
    auto outcome = AccessOutcome::cold_miss();
    if (full()) {
        const BlockId v = victim();
        order_.pop_front();
        where_.erase(v);
        outcome = AccessOutcome::capacity_miss(v);
    }
    where_.emplace(block, order_.insert(order_.end(), block));
    return outcome;
}

// FIFO

std::vector<BlockId> FifoPolicy::residents() const { return sorted_ids(queue_); }

BlockId FifoPolicy::victim() const {
    if (queue_.empty()) throw ContractViolation("FIFO victim requested from an empty cache");
    return queue_.front();
}

AccessOutcome FifoPolicy::on_access(BlockId block) {
    if (members_.contains(block)) {
        return AccessOutcome::hit();
    }
    auto outcome = AccessOutcome::cold_miss();
    if (full()) {
        const BlockId v = victim();
        queue_.pop_front();
        members_.erase(v);
        outcome = AccessOutcome::capacity_miss(v);
    }
    queue_.push_back(block);
    members_.insert(block);
    return outcome;
}

// LFU

std::vector<BlockId> LfuPolicy::residents() const {
    std::vector<BlockId> out;
    out.reserve(info_.size());
    for (const auto &[id, _] : info_) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

BlockId LfuPolicy::victim() const {
    if (ranking_.empty()) throw ContractViolation("LFU victim requested from an empty cache");
    return std::get<2>(*ranking_.begin());
}

std::uint64_t LfuPolicy::count(BlockId block) const {
    const auto it = info_.find(block);
    return it == info_.end() ? 0 : it->second.count;
}

AccessOutcome LfuPolicy::on_access(BlockId block) {
    if (auto it = info_.find(block); it != info_.end()) {
        auto &info = it->second;
        ranking_.erase({info.count, info.last, block});
        ++info.count;
        info.last = clock();
        ranking_.insert({info.count, info.last, block});
        return AccessOutcome::hit();
    }
    auto outcome = AccessOutcome::cold_miss();
    if (full()) {
        const BlockId v = victim();
        ranking_.erase(ranking_.begin());
        info_.erase(v);
        outcome = AccessOutcome::capacity_miss(v);
    }
    info_.emplace(block, Info{1, clock()});
    ranking_.insert({1, clock(), block});
    return outcome;
}

} // namespace awrpsim
