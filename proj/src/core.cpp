#include "awrpsim/core.hpp"

namespace awrpsim {

void CacheConfig::validate() const {
    if (capacity == 0) {
        throw ConfigError("capacity must be at least 1");
    }
    if (num_sets == 0) {
        throw ConfigError("number of sets must be at least 1");
    }
    if (capacity % num_sets != 0) {
        throw ConfigError("capacity " + std::to_string(capacity) + " is not divisible by " +
                          std::to_string(num_sets) + " sets");
    }
}

std::string to_string(OutcomeKind kind) {
    switch (kind) {
    case OutcomeKind::Hit:
        return "Hit";
    case OutcomeKind::ColdMiss:
        return "ColdMiss";
    case OutcomeKind::CapacityMiss:
        return "CapacityMiss";
    }
    return "?";
}

std::string to_string(const AccessOutcome &outcome) {
    auto s = to_string(outcome.kind);
    if (outcome.evicted) {
        s += "(" + std::to_string(*outcome.evicted) + ")";
    }
    return s;
}

} // namespace awrpsim
