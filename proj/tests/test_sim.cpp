#include "doctest.h"

#include <random>

#include "awrpsim/sim.hpp"
#include "awrpsim/trace_io.hpp"
#include "test_util.hpp"

using namespace awrpsim;
using namespace awrpsim::testing;

TEST_CASE("simulate on an empty trace") {
    for (const auto kind : kAllPolicyKinds) {
        const auto r = simulate(Trace{}, kind, CacheConfig{4, 1, 0});
        CHECK(r.hits == 0);
        CHECK(r.misses == 0);
        CHECK(r.hit_ratio_percent == 0.0);
    }
}

TEST_CASE("simulate on a single repeated block") {
    const Trace t("a", std::vector<BlockId>(10, A));
    const auto r = simulate(t, PolicyKind::LRU, CacheConfig{1, 1, 0});
    CHECK(r.hits == 9);
    CHECK(r.misses == 1);
    CHECK(r.evictions == 0);
    CHECK(r.hit_ratio_percent == doctest::Approx(90.0));
}

TEST_CASE("simulate AWRP on A,A,A,B,C") {
    const Trace t("f", {A, A, A, B, C});
    std::vector<AccessOutcome> seen;
    const auto r = simulate(t, PolicyKind::AWRP, CacheConfig{2, 1, 0},
                            [&](std::size_t, std::uint64_t, BlockId, const AccessOutcome &o) { seen.push_back(o); });
    CHECK(r.hits == 2);
    CHECK(r.misses == 3);
    CHECK(r.evictions == 1);
    REQUIRE(seen.size() == 5);
    CHECK(seen[4] == AccessOutcome::capacity_miss(B));
}

TEST_CASE("simulate rejects bad geometry before doing any work") {
    const Trace t("x", {A, B});
    bool called = false;
    auto obs = [&](std::size_t, std::uint64_t, BlockId, const AccessOutcome &) { called = true; };
    CHECK_THROWS_AS((simulate(t, PolicyKind::LRU, CacheConfig{10, 4, 0}, obs)), ConfigError);
    CHECK_THROWS_AS((simulate(t, PolicyKind::LRU, CacheConfig{0, 1, 0}, obs)), ConfigError);
    CHECK_FALSE(called);
}

TEST_CASE("simulate applies the block shift before set selection") {
    // Addresses 0..63 share block 0 at shift 6.
    std::vector<BlockId> raw;
    for (BlockId a = 0; a < 64; ++a) raw.push_back(a);
    const auto r = simulate(Trace("s", raw), PolicyKind::LRU, CacheConfig{1, 1, 6});
    CHECK(r.misses == 1);
    CHECK(r.hits == 63);
}

TEST_CASE("a trace living in one set behaves like a fully associative cache") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 50; ++round) {
        const std::uint64_t sets = 2 + rng() % 4;
        const std::uint64_t ways = 1 + rng() % 4;
        auto blocks = random_blocks(rng, 80, 10);
        for (auto &b : blocks) b *= sets;  // every block maps to set 0
        const Trace t("one-set", blocks);
        for (const auto kind : kAllPolicyKinds) {
            const auto full = simulate(t, kind, CacheConfig{ways, 1, 0});
            const auto split = simulate(t, kind, CacheConfig{ways * sets, sets, 0});
            CHECK(full.hits == split.hits);
            CHECK(full.misses == split.misses);
            CHECK(full.evictions == split.evictions);
        }
    }
}

TEST_CASE("per-set results add up to the aggregate") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 30; ++round) {
        const std::uint64_t sets = 1 + rng() % 4;
        const std::uint64_t ways = 1 + rng() % 3;
        const auto blocks = random_blocks(rng, 120, 24);
        for (const auto kind : kAllPolicyKinds) {
            std::vector<std::uint64_t> set_hits(sets), set_misses(sets);
            const auto agg = simulate(Trace("t", blocks), kind, CacheConfig{ways * sets, sets, 0},
                                      [&](std::size_t, std::uint64_t s, BlockId, const AccessOutcome &o) {
                                          (o.is_hit() ? set_hits : set_misses)[s]++;
                                      });
            std::uint64_t h = 0, m = 0;
            for (std::uint64_t s = 0; s < sets; ++s) {
                std::vector<BlockId> sub;
                for (auto b : blocks)
                    if (set_index(b, sets) == s) sub.push_back(b);
                const auto alone = simulate(Trace("sub", sub), kind, CacheConfig{ways, 1, 0});
                CHECK(alone.hits == set_hits[s]);
                CHECK(alone.misses == set_misses[s]);
                h += set_hits[s];
                m += set_misses[s];
            }
            CHECK(h == agg.hits);
            CHECK(m == agg.misses);
            CHECK(agg.accesses() == blocks.size());
            CHECK(agg.evictions <= agg.misses);
        }
    }
}

TEST_CASE("simulate is repeatable") {
    std::mt19937_64 rng(29);
    const Trace t("r", random_blocks(rng, 400, 40));
    for (const auto kind : kAllPolicyKinds) {
        CHECK(simulate(t, kind, CacheConfig{12, 4, 0}) == simulate(t, kind, CacheConfig{12, 4, 0}));
    }
}

TEST_CASE("loop workloads under LRU") {
    const auto t = generate(LoopWorkload{100, 7});
    CHECK(simulate(t, PolicyKind::LRU, CacheConfig{7, 1, 0}).misses == 7);
    CHECK(simulate(t, PolicyKind::LRU, CacheConfig{20, 1, 0}).misses == 7);
    CHECK(simulate(t, PolicyKind::LRU, CacheConfig{6, 1, 0}).hits == 0);
    CHECK(simulate(t, PolicyKind::LRU, CacheConfig{1, 1, 0}).hits == 0);
}

TEST_CASE("sweep fills every cell") {
    const Trace t("a", std::vector<BlockId>(10, A));
    const auto single = sweep(t, {PolicyKind::LRU}, {1}, CacheConfig{});
    CHECK(single.ratio(PolicyKind::LRU, 1) == doctest::Approx(90.0));

    const auto zipf = generate(ZipfWorkload{1000, 256, 0.8, 42});
    const auto table = sweep(zipf, kDefaultPolicies, kDefaultCapacities, CacheConfig{});
    CHECK(table.policies.size() == 4);
    CHECK(table.capacities.size() == 7);
    REQUIRE(table.ratios.size() == 4);
    for (std::size_t p = 0; p < 4; ++p) {
        REQUIRE(table.ratios[p].size() == 7);
        for (std::size_t c = 0; c < 7; ++c) {
            const auto &r = table.results[p][c];
            CHECK(r.policy == table.policies[p]);
            CHECK(r.config.capacity == table.capacities[c]);
            CHECK(table.ratios[p][c] == r.hit_ratio_percent);
        }
    }
}

TEST_CASE("sweep: OPT dominates LRU cell-wise") {
    std::mt19937_64 rng(37);
    const Trace t("rand", random_blocks(rng, 2000, 64));
    const auto table = sweep(t, {PolicyKind::OPT, PolicyKind::LRU}, {1, 2, 4, 8, 16, 32}, CacheConfig{});
    for (std::size_t c = 0; c < table.capacities.size(); ++c) {
        CHECK(table.ratios[0][c] >= table.ratios[1][c]);
    }
}

TEST_CASE("sweep results do not depend on worker count") {
    std::mt19937_64 rng(41);
    const Trace t("rand", random_blocks(rng, 3000, 300));
    std::vector<PolicyKind> all(kAllPolicyKinds.begin(), kAllPolicyKinds.end());
    const auto serial = sweep(t, all, kDefaultCapacities, CacheConfig{1, 2, 0}, 1);
    const auto parallel = sweep(t, all, kDefaultCapacities, CacheConfig{1, 2, 0}, 8);
    CHECK(serial.ratios == parallel.ratios);
    CHECK(serial.results == parallel.results);
}

TEST_CASE("sweep errors name the policy and capacity") {
    const Trace t("x", {A});
    try {
        sweep(t, {PolicyKind::FIFO}, {30, 45}, CacheConfig{1, 4, 0});
        FAIL("expected ConfigError");
    } catch (const ConfigError &e) {
        const std::string msg = e.what();
        CHECK(msg.find("FIFO") != std::string::npos);
        CHECK(msg.find("30") != std::string::npos);
    }
}
