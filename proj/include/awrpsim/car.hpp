#pragma once

#include <list>
#include <unordered_map>

#include "awrpsim/policy.hpp"

namespace awrpsim {

struct CarPage {
    BlockId block = 0;
    bool referenced = false;

    friend bool operator==(const CarPage &, const CarPage &) = default;
};

/// Contents of the CAR clocks and history lists. t1/t2 start at the page
/// under their hand; b1/b2 are ordered oldest to newest.
struct CarSnapshot {
    std::vector<CarPage> t1, t2;
    std::vector<BlockId> b1, b2;
    std::size_t target_p = 0;
};

/**
 * Clock with Adaptive Replacement.
 *
 * Two clocks t1 (seen once recently) and t2 (seen at least twice) hold the
 * resident pages, each page carrying a reference bit set on hit. Evicted
 * pages are remembered in b1/b2. A phantom hit in b1 raises target_p by one,
 * a phantom hit in b2 lowers it by one; adaptation happens before the
 * replacement sweep of that access.
 */
class CarPolicy final : public Policy {
public:
    explicit CarPolicy(std::size_t capacity) : Policy(capacity) {}

    PolicyKind kind() const noexcept override { return PolicyKind::CAR; }
    std::size_t size() const noexcept override { return t1_.size() + t2_.size(); }
    bool contains(BlockId block) const override;
    std::vector<BlockId> residents() const override;

    std::size_t target_p() const noexcept { return p_; }
    CarSnapshot snapshot() const;

    /**
     * Runs the two-hand sweep: when |t1| >= max(1, target_p) the t1 hand
     * moves referenced pages to t2 (bit cleared) until it finds an
     * unreferenced page, which is demoted to b1; otherwise the t2 hand clears
     * bits until it finds an unreferenced page, demoted to b2. Returns the
     * evicted block. Requires a full cache (ContractViolation otherwise).
     */
    BlockId replace();

protected:
    AccessOutcome on_access(BlockId block) override;

private:
    enum class Where { T1, T2, B1, B2 };

    // Clock lists: front is the page under the hand, back is just behind it.
    std::list<CarPage> t1_, t2_;
    // History lists: front is the oldest entry.
    std::list<BlockId> b1_, b2_;

    struct Slot {
        Where where;
        std::list<CarPage>::iterator page;
        std::list<BlockId>::iterator hist;
    };
    std::unordered_map<BlockId, Slot> slots_;
    std::size_t p_ = 0;

    void demote(std::list<CarPage> &clock, Where to);
    void drop_oldest(std::list<BlockId> &history);
};

} // namespace awrpsim
