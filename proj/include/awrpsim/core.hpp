#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace awrpsim {

/// Identity of a uniformly sized cache block (page). Equal ids denote the
/// same cached object.
using BlockId = std::uint64_t;

struct Access {
    BlockId block = 0;

    friend bool operator==(const Access &, const Access &) = default;
};

/// Ordered, immutable sequence of block references.
class Trace {
public:
    Trace() = default;
    Trace(std::string name, std::vector<BlockId> blocks)
        : name_(std::move(name)), blocks_(std::move(blocks)) {}

    const std::string &name() const noexcept { return name_; }
    const std::vector<BlockId> &blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    bool empty() const noexcept { return blocks_.empty(); }
    Access operator[](std::size_t i) const { return Access{blocks_[i]}; }

private:
    std::string name_;
    std::vector<BlockId> blocks_;
};

// Errors. Each maps to a distinct CLI exit code.

/// Invalid cache geometry or policy parameters.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input data (trace files, csv tables).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string &text, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what + ": '" + text + "'"),
          line_(line) {}
    explicit ParseError(const std::string &what) : std::runtime_error(what) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

/// A broken internal invariant or a violated operation precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Cache geometry. num_sets == 1 is fully associative.
struct CacheConfig {
    std::uint64_t capacity = 1;
    std::uint64_t num_sets = 1;
    unsigned block_size_log2 = 0;

    std::uint64_t associativity() const noexcept { return capacity / num_sets; }

    /// Throws ConfigError unless capacity >= 1, num_sets >= 1 and num_sets divides capacity.
    void validate() const;

    friend bool operator==(const CacheConfig &, const CacheConfig &) = default;
};

enum class OutcomeKind { Hit, ColdMiss, CapacityMiss };

struct AccessOutcome {
    OutcomeKind kind = OutcomeKind::Hit;
    std::optional<BlockId> evicted;

    static AccessOutcome hit() { return {OutcomeKind::Hit, std::nullopt}; }
    static AccessOutcome cold_miss() { return {OutcomeKind::ColdMiss, std::nullopt}; }
    static AccessOutcome capacity_miss(BlockId victim) { return {OutcomeKind::CapacityMiss, victim}; }

    bool is_hit() const noexcept { return kind == OutcomeKind::Hit; }

    friend bool operator==(const AccessOutcome &, const AccessOutcome &) = default;
};

std::string to_string(OutcomeKind kind);
std::string to_string(const AccessOutcome &outcome);

/// Maps a raw address to its block number. Shifts of 64 or more yield block 0.
constexpr BlockId block_of(std::uint64_t address, unsigned block_size_log2) noexcept {
    return block_size_log2 >= 64 ? 0 : address >> block_size_log2;
}

} // namespace awrpsim
