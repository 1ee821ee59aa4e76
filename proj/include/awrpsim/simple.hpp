#pragma once

#include <list>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "awrpsim/policy.hpp"

namespace awrpsim {

/// Least recently used.
class LruPolicy final : public Policy {
public:
    explicit LruPolicy(std::size_t capacity) : Policy(capacity) {}

    PolicyKind kind() const noexcept override { return PolicyKind::LRU; }
    std::size_t size() const noexcept override { return order_.size(); }
    bool contains(BlockId block) const override { return where_.contains(block); }
    std::vector<BlockId> residents() const override;

    /// The least-recently-accessed resident. Throws ContractViolation when empty.
    BlockId victim() const;

protected:
    AccessOutcome on_access(BlockId block) override;

private:
    // front = least recent
    std::list<BlockId> order_;
    std::unordered_map<BlockId, std::list<BlockId>::iterator> where_;
};

/// First in, first out. Hits never reorder the queue.
class FifoPolicy final : public Policy {
public:
    explicit FifoPolicy(std::size_t capacity) : Policy(capacity) {}

    PolicyKind kind() const noexcept override { return PolicyKind::FIFO; }
    std::size_t size() const noexcept override { return queue_.size(); }
    bool contains(BlockId block) const override { return members_.contains(block); }
    std::vector<BlockId> residents() const override;

    /// The earliest-inserted resident. Throws ContractViolation when empty.
    BlockId victim() const;

protected:
    AccessOutcome on_access(BlockId block) override;

private:
    std::list<BlockId> queue_;
    std::unordered_set<BlockId> members_;
};

/// Least frequently used. Counts only cover the current residency; ties go to
/// the least recent access, then the smaller id.
class LfuPolicy final : public Policy {
public:
    explicit LfuPolicy(std::size_t capacity) : Policy(capacity) {}

    PolicyKind kind() const noexcept override { return PolicyKind::LFU; }
    std::size_t size() const noexcept override { return info_.size(); }
    bool contains(BlockId block) const override { return info_.contains(block); }
    std::vector<BlockId> residents() const override;

    BlockId victim() const;
    /// Access count of a resident block, 0 if absent.
    std::uint64_t count(BlockId block) const;

protected:
    AccessOutcome on_access(BlockId block) override;

private:
    struct Info {
        std::uint64_t count;
        std::uint64_t last;
    };
    // (count, last access clock, id); begin() is the victim
    using Key = std::tuple<std::uint64_t, std::uint64_t, BlockId>;

    std::set<Key> ranking_;
    std::unordered_map<BlockId, Info> info_;
};

} // namespace awrpsim
