#include "awrpsim/arc.hpp"

#include <algorithm>

namespace awrpsim {

bool ArcPolicy::contains(BlockId block) const {
    const auto it = slots_.find(block);
    return it != slots_.end() && (it->second.where == Where::T1 || it->second.where == Where::T2);
}

std::vector<BlockId> ArcPolicy::residents() const {
    std::vector<BlockId> out(t1_.begin(), t1_.end());
    out.insert(out.end(), t2_.begin(), t2_.end());
    std::sort(out.begin(), out.end());
    return out;
}

ArcSnapshot ArcPolicy::snapshot() const {
    return ArcSnapshot{{t1_.begin(), t1_.end()},
                       {t2_.begin(), t2_.end()},
                       {b1_.begin(), b1_.end()},
                       {b2_.begin(), b2_.end()},
                       p_};
}

std::list<BlockId> &ArcPolicy::list_of(Where w) {
    switch (w) {
    case Where::T1:
        return t1_;
    case Where::T2:
        return t2_;
    case Where::B1:
        return b1_;
    case Where::B2:
        return b2_;
    }
    throw ContractViolation("ARC: bad list tag");
}

void ArcPolicy::move_to(BlockId block, Where to) {
    auto &dst = list_of(to);
    if (auto found = slots_.find(block); found != slots_.end()) {
        auto &slot = found->second;
        dst.splice(dst.end(), list_of(slot.where), slot.it);
        slot.where = to;
        slot.it = std::prev(dst.end());
        return;
    }
    slots_.emplace(block, Slot{to, dst.insert(dst.end(), block)});
}

void ArcPolicy::drop_lru(Where w) {
    auto &l = list_of(w);
    if (l.empty()) throw ContractViolation("ARC: trimming an empty list");
    slots_.erase(l.front());
    l.pop_front();
}

BlockId ArcPolicy::replace(bool referenced_in_b2) {
    const bool from_t1 =
        !t1_.empty() && (t1_.size() > p_ || (referenced_in_b2 && t1_.size() == p_));
    auto &src = from_t1 ? t1_ : t2_;
    if (src.empty()) throw ContractViolation("ARC: replacement from an empty list");
    const BlockId victim = src.front();
    move_to(victim, from_t1 ? Where::B1 : Where::B2);
    return victim;
}

AccessOutcome ArcPolicy::on_access(BlockId block) {
    const std::size_t c = capacity();
    const auto found = slots_.find(block);

    if (found != slots_.end()) {
        const Where where = found->second.where;
        if (where == Where::T1 || where == Where::T2) {
            move_to(block, Where::T2);
            return AccessOutcome::hit();
        }
        // Phantom hit.
        if (where == Where::B1) {
            p_ = std::min(p_ + 1, c);
        } else {
            p_ = p_ > 0 ? p_ - 1 : 0;
        }
        auto outcome = AccessOutcome::cold_miss();
        if (full()) outcome = AccessOutcome::capacity_miss(replace(where == Where::B2));
        move_to(block, Where::T2);
        return outcome;
    }

    auto outcome = AccessOutcome::cold_miss();
    if (t1_.size() + b1_.size() == c) {
        if (t1_.size() < c) {
            drop_lru(Where::B1);
            if (full()) outcome = AccessOutcome::capacity_miss(replace(false));
        } else {
            const BlockId victim = t1_.front();
            drop_lru(Where::T1);
            outcome = AccessOutcome::capacity_miss(victim);
        }
    } else {
        const std::size_t total = t1_.size() + t2_.size() + b1_.size() + b2_.size();
        if (total >= c) {
            if (total == 2 * c) drop_lru(Where::B2);
            if (full()) outcome = AccessOutcome::capacity_miss(replace(false));
        }
    }
    move_to(block, Where::T1);
    return outcome;
}

} // namespace awrpsim
