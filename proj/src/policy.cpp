#include "awrpsim/policy.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "awrpsim/arc.hpp"
#include "awrpsim/awrp.hpp"
#include "awrpsim/car.hpp"
#include "awrpsim/opt.hpp"
#include "awrpsim/simple.hpp"

namespace awrpsim {

std::string_view policy_name(PolicyKind kind) noexcept {
    switch (kind) {
    case PolicyKind::AWRP:
        return "AWRP";
    case PolicyKind::LRU:
        return "LRU";
    case PolicyKind::FIFO:
        return "FIFO";
    case PolicyKind::LFU:
        return "LFU";
    case PolicyKind::ARC:
        return "ARC";
    case PolicyKind::CAR:
        return "CAR";
    case PolicyKind::OPT:
        return "OPT";
    }
    return "?";
}

std::optional<PolicyKind> parse_policy_kind(std::string_view name) noexcept {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    for (const auto kind : kAllPolicyKinds) {
        if (policy_name(kind) == upper) return kind;
    }
    return std::nullopt;
}

Policy::Policy(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw ConfigError("policy capacity must be at least 1");
}

AccessOutcome Policy::access(BlockId block) {
    ++clock_;
    const auto outcome = on_access(block);
    if (size() > capacity_) {
        throw ContractViolation(std::string(policy_name(kind())) + ": resident count " +
                                std::to_string(size()) + " exceeds capacity " +
                                std::to_string(capacity_));
    }
    if (!contains(block) || (outcome.evicted && *outcome.evicted == block)) {
        throw ContractViolation(std::string(policy_name(kind())) +
                                ": referenced block not resident after access");
    }
    return outcome;
}

std::unique_ptr<Policy> make_policy(PolicyKind kind, std::size_t capacity) {
    switch (kind) {
    case PolicyKind::AWRP:
        return std::make_unique<AwrpPolicy>(capacity);
    case PolicyKind::LRU:
        return std::make_unique<LruPolicy>(capacity);
    case PolicyKind::FIFO:
        return std::make_unique<FifoPolicy>(capacity);
    case PolicyKind::LFU:
        return std::make_unique<LfuPolicy>(capacity);
    case PolicyKind::ARC:
        return std::make_unique<ArcPolicy>(capacity);
    case PolicyKind::CAR:
        return std::make_unique<CarPolicy>(capacity);
    case PolicyKind::OPT:
        throw ConfigError("OPT needs the future reference stream; use make_offline_policy");
    }
    throw ConfigError("unknown policy kind");
}

std::unique_ptr<Policy> make_offline_policy(std::size_t capacity, std::vector<BlockId> stream) {
    return std::make_unique<OptPolicy>(capacity, std::move(stream));
}

} // namespace awrpsim
