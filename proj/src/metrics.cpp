#include "awrpsim/metrics.hpp"

#include <stdexcept>
#include <string>

namespace awrpsim {

double hit_ratio(std::uint64_t hits, std::uint64_t total) {
    if (hits > total) {
        throw std::invalid_argument("hit count " + std::to_string(hits) + " exceeds total " +
                                    std::to_string(total));
    }
    if (total == 0) return 0.0;
    return 100.0 * static_cast<double>(hits) / static_cast<double>(total);
}

double relative_gain(double candidate_pct, double baseline_pct) {
    if (baseline_pct == 0.0) {
        throw std::domain_error("relative gain is undefined for a zero baseline");
    }
    return 100.0 * (candidate_pct - baseline_pct) / baseline_pct;
}

} // namespace awrpsim
