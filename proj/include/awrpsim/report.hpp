#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "awrpsim/metrics.hpp"
#include "awrpsim/sim.hpp"

namespace awrpsim {

enum class ReportFormat { Text, Csv, Json, PlotData };

std::string_view format_name(ReportFormat format) noexcept;
/// Case-insensitive: text, csv, json, plotdata.
std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept;

struct GainPoint {
    std::uint64_t capacity = 0;
    /// Unset when the baseline hit ratio is 0 at this capacity.
    std::optional<double> percent;
};

/// Relative gain of `candidate` over `baseline` at every capacity of a table.
struct GainReport {
    PolicyKind baseline = PolicyKind::LRU;
    PolicyKind candidate = PolicyKind::AWRP;
    std::vector<GainPoint> per_capacity;
    /// Extremes and arithmetic mean over the defined points; unset if none are defined.
    std::optional<GainPoint> max_gain;
    std::optional<GainPoint> min_gain;
    std::optional<double> mean_gain;
};

/// Gains are computed from the table's full-precision ratios.
GainReport gain_report(const ComparisonTable &table, PolicyKind candidate, PolicyKind baseline);

/// `candidate` against every other policy of the table, in table order.
std::vector<GainReport> gain_reports(const ComparisonTable &table, PolicyKind candidate);

/**
 * Renders a comparison table. Ratios are printed with two decimals.
 *
 *   text     aligned grid, capacities as rows, then any gain reports
 *   csv      "capacity,<policy>,..." header, one row per capacity
 *   json     trace name, geometry, cells and gain reports
 *   plotdata one whitespace-separated "capacity ratio" block per policy
 *
 * OPT is marked as an offline oracle in every format (a '#' comment line in csv).
 * Output is a pure function of the inputs.
 */
std::string render(const ComparisonTable &table, ReportFormat format,
                   std::span<const GainReport> gains = {});

/// Renders a single simulation result (text, csv or json; plotdata falls back to csv).
std::string render(const SimResult &result, ReportFormat format, std::string_view trace_name = {});

/// Reads back csv produced by render(). Throws ParseError.
ComparisonTable parse_csv(std::string_view text);

/// Two-decimal fixed formatting used by every renderer.
std::string format_percent(double value);

} // namespace awrpsim
