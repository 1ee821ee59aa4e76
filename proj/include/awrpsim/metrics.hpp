#pragma once

#include <cstdint>

namespace awrpsim {

/// 100 * hits / total, or 0 when total is 0. Throws std::invalid_argument if hits > total.
double hit_ratio(std::uint64_t hits, std::uint64_t total);

/// Signed relative improvement of candidate over baseline, in percent:
/// 100 * (candidate - baseline) / baseline. Throws std::domain_error when baseline is 0.
double relative_gain(double candidate_pct, double baseline_pct);

} // namespace awrpsim
