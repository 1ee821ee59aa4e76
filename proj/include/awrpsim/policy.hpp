#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "awrpsim/core.hpp"

namespace awrpsim {

enum class PolicyKind { AWRP, LRU, FIFO, LFU, ARC, CAR, OPT };

inline constexpr std::array<PolicyKind, 7> kAllPolicyKinds = {
    PolicyKind::AWRP, PolicyKind::LRU, PolicyKind::FIFO, PolicyKind::LFU,
    PolicyKind::ARC,  PolicyKind::CAR, PolicyKind::OPT};

/// Canonical uppercase name, e.g. "AWRP".
std::string_view policy_name(PolicyKind kind) noexcept;

/// Case-insensitive lookup of a policy name.
std::optional<PolicyKind> parse_policy_kind(std::string_view name) noexcept;

/// True for policies that need the future of the reference stream.
constexpr bool is_offline(PolicyKind kind) noexcept { return kind == PolicyKind::OPT; }

/**
 * Eviction-policy state machine for a single cache (or a single set).
 *
 * access() is the only mutating entry point. It advances the per-instance
 * clock, classifies the reference, evicts at most one block and leaves the
 * referenced block resident. After every call the resident count is at most
 * capacity(); a violation throws ContractViolation.
 *
 * Instances are single-writer; distinct instances are independent.
 */
class Policy {
public:
    explicit Policy(std::size_t capacity);
    virtual ~Policy() = default;

    Policy(const Policy &) = delete;
    Policy &operator=(const Policy &) = delete;

    virtual PolicyKind kind() const noexcept = 0;

    AccessOutcome access(BlockId block);

    std::size_t capacity() const noexcept { return capacity_; }
    /// Number of accesses presented so far; the first access observes 1.
    std::uint64_t clock() const noexcept { return clock_; }

    virtual std::size_t size() const noexcept = 0;
    virtual bool contains(BlockId block) const = 0;
    /// Resident blocks in ascending id order.
    virtual std::vector<BlockId> residents() const = 0;

    bool full() const noexcept { return size() >= capacity_; }

protected:
    /// Policy-specific handling; clock() already reflects this access.
    virtual AccessOutcome on_access(BlockId block) = 0;

private:
    std::size_t capacity_;
    std::uint64_t clock_ = 0;
};

/// Creates an empty online policy. OPT is rejected here: use make_offline_policy.
std::unique_ptr<Policy> make_policy(PolicyKind kind, std::size_t capacity);

/// Creates an OPT instance that will be fed exactly `stream`, in order.
std::unique_ptr<Policy> make_offline_policy(std::size_t capacity, std::vector<BlockId> stream);

} // namespace awrpsim
