#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "awrpsim/core.hpp"

namespace awrpsim {

/// Plain: one address per line. Labeled: "<label> <address>", label ignored.
enum class TraceFormat { Plain, Labeled };

std::string_view format_name(TraceFormat format) noexcept;
/// Case-insensitive.
std::optional<TraceFormat> parse_trace_format(std::string_view name) noexcept;

/// Parses an unsigned decimal or 0x/0X-prefixed hexadecimal address.
std::optional<std::uint64_t> parse_address(std::string_view token) noexcept;

struct ParseStats {
    std::size_t lines = 0;    ///< physical lines read
    std::size_t skipped = 0;  ///< blank and '#' comment lines
};

/**
 * Reads a trace. Blank lines and lines whose first non-space character is
 * '#' are skipped; every other line must parse under `format`, otherwise
 * ParseError reports its line number and text. Each address is mapped
 * through block_of(address, block_size_log2).
 */
Trace parse_trace(std::istream &in, TraceFormat format, unsigned block_size_log2,
                  std::string name = {}, ParseStats *stats = nullptr);
Trace parse_trace(std::string_view text, TraceFormat format, unsigned block_size_log2,
                  std::string name = {}, ParseStats *stats = nullptr);
/// Reads a trace file; the trace is named after the file stem.
Trace load_trace(const std::filesystem::path &path, TraceFormat format, unsigned block_size_log2);

/// Writes one decimal block id per line, preceded by "# <header>" when header is non-empty.
void write_plain(std::ostream &out, const Trace &trace, std::string_view header = {});

// Synthetic workloads.

/// 0, 1, ..., universe-1 repeated until n accesses.
struct ScanWorkload {
    std::uint64_t n = 0;
    std::uint64_t universe = 1;
};

/// 0, 1, ..., loop_len-1 cycled until n accesses.
struct LoopWorkload {
    std::uint64_t n = 0;
    std::uint64_t loop_len = 1;
};

/// n i.i.d. draws with P(k) proportional to 1 / (k+1)^s over [0, universe).
struct ZipfWorkload {
    std::uint64_t n = 0;
    std::uint64_t universe = 1;
    double s = 0.0;
    std::uint64_t seed = 0;
};

using WorkloadSpec = std::variant<ScanWorkload, LoopWorkload, ZipfWorkload>;

/// Name of the generator behind Zipf draws (std::mt19937_64, whose output
/// sequence is fixed by the C++ standard).
inline constexpr std::string_view kPrngName = "mt19937_64";

/// Throws ConfigError if the workload's invariants do not hold.
void validate(const WorkloadSpec &spec);

/// One-line description, e.g. "zipf n=1000 universe=256 s=0.8 seed=42 prng=mt19937_64".
std::string describe(const WorkloadSpec &spec);

/// Deterministic: the same spec always produces the same trace, named by describe().
Trace generate(const WorkloadSpec &spec);

} // namespace awrpsim
