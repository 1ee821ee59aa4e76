#pragma once

#include <list>
#include <unordered_map>

#include "awrpsim/policy.hpp"

namespace awrpsim {

/// Contents of the four ARC lists, each ordered least to most recent.
struct ArcSnapshot {
    std::vector<BlockId> t1, t2, b1, b2;
    std::size_t target_p = 0;
};

/**
 * Adaptive Replacement Cache.
 *
 * t1/t2 hold resident blocks seen once / more than once; b1/b2 remember the
 * blocks recently evicted from them. A phantom hit in b1 grows the t1 target
 * by one, a phantom hit in b2 shrinks it by one.
 */
class ArcPolicy final : public Policy {
public:
    explicit ArcPolicy(std::size_t capacity) : Policy(capacity) {}

    PolicyKind kind() const noexcept override { return PolicyKind::ARC; }
    std::size_t size() const noexcept override { return t1_.size() + t2_.size(); }
    bool contains(BlockId block) const override;
    std::vector<BlockId> residents() const override;

    std::size_t target_p() const noexcept { return p_; }
    ArcSnapshot snapshot() const;

protected:
    AccessOutcome on_access(BlockId block) override;

private:
    enum class Where { T1, T2, B1, B2 };
    struct Slot {
        Where where;
        std::list<BlockId>::iterator it;
    };

    std::list<BlockId> &list_of(Where w);
    void move_to(BlockId block, Where to);
    void drop_lru(Where w);
    BlockId replace(bool referenced_in_b2);

    // front = LRU, back = MRU
    std::list<BlockId> t1_, t2_, b1_, b2_;
    std::unordered_map<BlockId, Slot> slots_;
    std::size_t p_ = 0;
};

} // namespace awrpsim
