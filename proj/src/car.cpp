#include "awrpsim/car.hpp"

#include <algorithm>

namespace awrpsim {

bool CarPolicy::contains(BlockId block) const {
    const auto it = slots_.find(block);
    return it != slots_.end() && (it->second.where == Where::T1 || it->second.where == Where::T2);
}

std::vector<BlockId> CarPolicy::residents() const {
    std::vector<BlockId> out;
    out.reserve(size());
    for (const auto &pg : t1_) out.push_back(pg.block);
    for (const auto &pg : t2_) out.push_back(pg.block);
    std::sort(out.begin(), out.end());
    return out;
}

CarSnapshot CarPolicy::snapshot() const {
    return CarSnapshot{{t1_.begin(), t1_.end()},
                       {t2_.begin(), t2_.end()},
                       {b1_.begin(), b1_.end()},
                       {b2_.begin(), b2_.end()},
                       p_};
}

void CarPolicy::demote(std::list<CarPage> &clock, Where to) {
    const BlockId block = clock.front().block;
    clock.pop_front();
    auto &history = to == Where::B1 ? b1_ : b2_;
    auto &slot = slots_.at(block);
    slot.where = to;
    slot.hist = history.insert(history.end(), block);
}

void CarPolicy::drop_oldest(std::list<BlockId> &history) {
    if (history.empty()) throw ContractViolation("CAR: trimming an empty history list");
    slots_.erase(history.front());
    history.pop_front();
}

BlockId CarPolicy::replace() {
    if (!full() || size() == 0) {
        throw ContractViolation("CAR replace called on a cache that is not full");
    }
    for (;;) {
        if (t1_.size() >= std::max<std::size_t>(1, p_)) {
            auto &head = t1_.front();
            if (!head.referenced) {
                const BlockId victim = head.block;
                demote(t1_, Where::B1);
                return victim;
            }
            head.referenced = false;
            t2_.splice(t2_.end(), t1_, t1_.begin());
            slots_.at(t2_.back().block).where = Where::T2;
        } else {
            auto &head = t2_.front();
            if (!head.referenced) {
                const BlockId victim = head.block;
                demote(t2_, Where::B2);
                return victim;
            }
            head.referenced = false;
            t2_.splice(t2_.end(), t2_, t2_.begin());
        }
    }
}

AccessOutcome CarPolicy::on_access(BlockId block) {
    const std::size_t c = capacity();
    const auto found = slots_.find(block);
    const Where where = found == slots_.end() ? Where::T1 : found->second.where;
    const bool known = found != slots_.end();

    if (known && (where == Where::T1 || where == Where::T2)) {
        found->second.page->referenced = true;
        return AccessOutcome::hit();
    }

    const bool in_b1 = known && where == Where::B1;
    const bool in_b2 = known && where == Where::B2;
    if (in_b1) p_ = std::min(p_ + 1, c);
    if (in_b2) p_ = p_ > 0 ? p_ - 1 : 0;

    auto outcome = AccessOutcome::cold_miss();
    if (full()) {
        outcome = AccessOutcome::capacity_miss(replace());
        if (!in_b1 && !in_b2) {
            if (t1_.size() + b1_.size() == c) {
                drop_oldest(b1_);
            } else if (t1_.size() + t2_.size() + b1_.size() + b2_.size() == 2 * c) {
                drop_oldest(b2_);
            }
        }
    }

    if (!in_b1 && !in_b2) {
        t1_.push_back(CarPage{block, false});
        slots_[block] = Slot{Where::T1, std::prev(t1_.end()), {}};
    } else {
        auto &slot = slots_.at(block);
        (in_b1 ? b1_ : b2_).erase(slot.hist);
        t2_.push_back(CarPage{block, false});
        slot.where = Where::T2;
        slot.page = std::prev(t2_.end());
    }
    return outcome;
}

} // namespace awrpsim
