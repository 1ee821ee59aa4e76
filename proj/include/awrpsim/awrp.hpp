#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "awrpsim/policy.hpp"

namespace awrpsim {

/// Per-resident AWRP bookkeeping: frequency F, recency R (clock of the last
/// access) and the cached weight W.
struct AwrpEntry {
    BlockId block = 0;
    std::uint64_t freq = 0;
    std::uint64_t recency = 0;
    double weight = 0.0;
};

/// W = F / (N - R). Requires clock_n > recency; otherwise throws ContractViolation.
double awrp_weight(std::uint64_t freq, std::uint64_t recency, std::uint64_t clock_n);

/**
 * Recomputes the weight of every resident at clock `clock_n` (storing it back
 * into the entries) and returns the block with the smallest weight.
 * Ties go to the smaller recency, then to the smaller block id.
 *
 * Throws ContractViolation on an empty set or when a resident's recency is
 * not strictly below clock_n.
 */
BlockId awrp_select_victim(std::span<AwrpEntry> residents, std::uint64_t clock_n);

/// Adaptive Weight Ranking Policy: evicts the resident with the lowest F / (N - R).
class AwrpPolicy final : public Policy {
public:
    explicit AwrpPolicy(std::size_t capacity);

    PolicyKind kind() const noexcept override { return PolicyKind::AWRP; }
    std::size_t size() const noexcept override { return entries_.size(); }
    bool contains(BlockId block) const override { return index_.contains(block); }
    std::vector<BlockId> residents() const override;

    /// Bookkeeping for a resident block, or nullptr.
    const AwrpEntry *entry(BlockId block) const;
    std::span<const AwrpEntry> entries() const noexcept { return entries_; }

protected:
    AccessOutcome on_access(BlockId block) override;

private:
    void insert(BlockId block);

    std::vector<AwrpEntry> entries_;
    std::unordered_map<BlockId, std::size_t> index_;
};

} // namespace awrpsim
