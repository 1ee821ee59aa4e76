#pragma once

#include <limits>
#include <set>
#include <span>
#include <unordered_map>

#include "awrpsim/policy.hpp"

namespace awrpsim {

/// Position marker for "never referenced again".
inline constexpr std::uint64_t kNeverUsed = std::numeric_limits<std::uint64_t>::max();

/// For each position i, the index of the next reference to stream[i], or kNeverUsed.
std::vector<std::uint64_t> next_use_positions(std::span<const BlockId> stream);

/// Belady's choice: the resident whose next use in `future` is farthest away.
/// Blocks never used again win; ties go to the smaller id.
BlockId opt_select_victim(std::span<const BlockId> residents, std::span<const BlockId> future);

/**
 * Offline-optimal (Belady) replacement. The instance is bound to the exact
 * reference stream it will be fed; presenting any other block throws
 * ContractViolation.
 */
class OptPolicy final : public Policy {
public:
    OptPolicy(std::size_t capacity, std::vector<BlockId> stream);

    PolicyKind kind() const noexcept override { return PolicyKind::OPT; }
    std::size_t size() const noexcept override { return next_of_.size(); }
    bool contains(BlockId block) const override { return next_of_.contains(block); }
    std::vector<BlockId> residents() const override;

protected:
    AccessOutcome on_access(BlockId block) override;

private:
    struct Farthest {
        bool operator()(const std::pair<std::uint64_t, BlockId> &a,
                        const std::pair<std::uint64_t, BlockId> &b) const noexcept {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        }
    };

    std::vector<BlockId> stream_;
    std::vector<std::uint64_t> next_use_;
    // (next use, block); begin() is the victim
    std::set<std::pair<std::uint64_t, BlockId>, Farthest> ranking_;
    std::unordered_map<BlockId, std::uint64_t> next_of_;
};

} // namespace awrpsim
