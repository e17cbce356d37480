#include <algorithm>

#include "doctest.h"

#include "fspp/generate.hpp"
#include "fspp/rng.hpp"
#include "fspp/sim.hpp"
#include "helpers.hpp"

using namespace fspp;
using test::from_rows;

namespace {

Configuration random_simple(uint64_t seed, int max_w, int max_h,
                            AllowedSet alphabet = AllowedSet::full()) {
    Rng rng(seed);
    GenSpec spec;
    spec.width = rng.range(1, max_w);
    spec.height = rng.range(1, max_h);
    spec.alphabet = alphabet;
    spec.seed = rng.next();
    return generate(spec);
}

int frozen_count(const Configuration& config) {
    int n = 0;
    for (int16_t raw : config.raw_cells())
        if (raw == -1) ++n;
    return n;
}

}  // namespace

TEST_CASE("neighbors are in-rectangle, north/east/south/west order") {
    Configuration c(3, 3);
    auto mid = neighbors(c, {1, 1});
    REQUIRE(mid.size() == 4);
    CHECK(mid[0] == Coord{1, 2});
    CHECK(mid[1] == Coord{2, 1});
    CHECK(mid[2] == Coord{1, 0});
    CHECK(mid[3] == Coord{0, 1});
    CHECK(neighbors(c, {0, 0}).size() == 2);
    CHECK(neighbors(Configuration(1, 1), {0, 0}).empty());
}

TEST_CASE("step fires every >=4 cell and spreads single grains") {
    CHECK(step(Configuration(3, 3)) == Configuration(3, 3));

    Configuration single = from_rows({"4"});
    CHECK(step(single).at({0, 0}).is_frozen());

    Configuration pair = from_rows({"43"});
    Configuration once = step(pair);
    CHECK(once.at({0, 0}).is_frozen());
    CHECK(once.at({1, 0}).grains() == 4);
    Configuration twice = step(once);
    CHECK(twice.at({0, 0}).is_frozen());
    CHECK(twice.at({1, 0}).is_frozen());
}

TEST_CASE("grains sent to Frozen cells vanish") {
    // Middle fires; left is already Frozen and must absorb silently.
    Configuration c = from_rows({"F43"});
    Configuration next = step(c);
    CHECK(next.at({0, 0}).is_frozen());
    CHECK(next.at({1, 0}).is_frozen());
    CHECK(next.at({2, 0}).grains() == 4);
}

TEST_CASE("stabilize: chain of 3s records firing times 0..4") {
    Configuration row = from_rows({"43333"});
    StabilizeResult result = stabilize(row);
    CHECK(result.trace.steps == 5);
    for (int x = 0; x < 5; ++x) {
        CHECK(result.config.at({x, 0}).is_frozen());
        CHECK(result.trace.firing_time({x, 0}) == x);
    }
}

TEST_CASE("stabilize: all-zero grid is already stable") {
    StabilizeResult result = stabilize(Configuration(4, 3));
    CHECK(result.config == Configuration(4, 3));
    CHECK(result.trace.steps == 0);
}

TEST_CASE("stabilize: 5x3 hand example, wave through the middle row") {
    // Rows top-first; bottom-up reading 1 4 4 4 1 / 4 1 1 1 1 / 4 4 4 4 4.
    Configuration wave = from_rows({"44444", "41111", "14441"});
    StabilizeResult result = stabilize(wave);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 5; ++x) {
            const Coord c{x, y};
            INFO("cell (", x, ",", y, ")");
            if (wave.at(c).grains() == 4) CHECK(result.trace.firing_time(c) == 0);
        }
    // A wave crosses the middle row; the corner 1s lack a fourth grain.
    CHECK(result.trace.firing_time({1, 1}) == 1);
    CHECK(result.trace.firing_time({2, 1}) == 2);
    CHECK(result.trace.firing_time({3, 1}) == 3);
    CHECK(result.config.at({0, 0}).grains() == 3);
    CHECK(result.config.at({4, 0}).grains() == 2);
    CHECK(result.config.at({4, 1}).grains() == 3);
    CHECK(result.trace.steps == 4);
}

TEST_CASE("decide_fspp matches the spec'd base cases") {
    CHECK(decide_fspp({from_rows({"4"}), {0, 0}}).fires);
    CHECK(decide_fspp({from_rows({"4"}), {0, 0}}).first_time == 0);

    Configuration no4 = from_rows({"3210", "0123"});
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < 4; ++x) CHECK_FALSE(decide_fspp({no4, {x, y}}).fires);

    FsppAnswer far_end = decide_fspp({from_rows({"43333"}), {4, 0}});
    CHECK(far_end.fires);
    CHECK(far_end.first_time == 4);
}

TEST_CASE("decide_fspp rejects out-of-bounds cells") {
    CHECK_THROWS_AS(decide_fspp({Configuration(2, 2), {2, 0}}), OutOfBounds);
    CHECK_THROWS_AS(decide_fspp({Configuration(2, 2), {0, -1}}), OutOfBounds);
}

TEST_CASE("decide_fspp agrees with the stabilize trace on every cell") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Configuration config = random_simple(derive_seed(101, seed), 7, 7);
        Trace trace = stabilize(config).trace;
        for (int y = 0; y < config.height(); ++y)
            for (int x = 0; x < config.width(); ++x) {
                FsppAnswer answer = decide_fspp({config, {x, y}});
                CHECK(answer.fires == trace.fired({x, y}));
                if (answer.fires) CHECK(*answer.first_time == *trace.firing_time({x, y}));
            }
    }
}

TEST_CASE("synchronous sweep and frontier run agree (dual-route oracle)") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Configuration config = random_simple(derive_seed(202, seed), 8, 8);
        Configuration swept = config;
        int steps = 0;
        while (true) {
            Configuration next = step(swept);
            if (next == swept) break;
            swept = std::move(next);
            ++steps;
            REQUIRE(steps <= config.width() * config.height() + 1);
        }
        CHECK(stabilize(config).config == swept);
    }
}

TEST_CASE("frozen set grows monotonically and each step freezes something") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Configuration config = random_simple(derive_seed(303, seed), 6, 6);
        Configuration current = config;
        while (true) {
            Configuration next = step(current);
            if (next == current) break;
            CHECK(frozen_count(next) > frozen_count(current));
            for (size_t i = 0; i < current.size(); ++i)
                if (current.raw_cells()[i] == -1) CHECK(next.raw_cells()[i] == -1);
            current = std::move(next);
        }
    }
}

TEST_CASE("a trace gives each frozen cell exactly one firing time") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Configuration config = random_simple(derive_seed(404, seed), 6, 6);
        StabilizeResult result = stabilize(config);
        CHECK(result.trace.steps <= config.width() * config.height());
        for (int y = 0; y < config.height(); ++y)
            for (int x = 0; x < config.width(); ++x)
                CHECK(result.config.at({x, y}).is_frozen() == result.trace.fired({x, y}));
    }
}

TEST_CASE("fire_sequential validates the schedule") {
    Configuration pair = from_rows({"43"});
    CHECK(fire_sequential(pair, {}) == pair);

    Configuration fired = fire_sequential(pair, {{0, 0}});
    CHECK(fired.at({0, 0}).is_frozen());
    CHECK(fired.at({1, 0}).grains() == 4);

    CHECK_THROWS_AS(fire_sequential(pair, {{1, 0}}), InvalidSchedule);        // holds 3
    CHECK_THROWS_AS(fire_sequential(pair, {{0, 0}, {0, 0}}), InvalidSchedule);  // already Frozen
    CHECK_THROWS_AS(fire_sequential(pair, {{5, 5}}), OutOfBounds);
}

TEST_CASE("abelian property: any maximal sequential order reaches the same frozen set") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        Configuration config = random_simple(derive_seed(505, seed), 6, 6);
        Configuration parallel = stabilize(config).config;
        for (uint64_t run = 0; run < 20; ++run) {
            Schedule schedule = random_maximal_schedule(config, derive_seed(seed, run));
            Configuration sequential = fire_sequential(config, schedule);
            for (size_t i = 0; i < config.size(); ++i)
                CHECK((sequential.raw_cells()[i] == -1) == (parallel.raw_cells()[i] == -1));
        }
    }
}

TEST_CASE("clamp caps grains at 4 and preserves every answer") {
    Configuration hot(1, 1, CellValue::grains(7));
    CHECK(clamp(hot).at({0, 0}).grains() == 4);

    Configuration simple = from_rows({"41", "23"});
    CHECK(clamp(simple) == simple);

    Configuration tall(1, 2);
    tall.set({0, 1}, CellValue::grains(9));
    tall.set({0, 0}, CellValue::grains(3));
    CHECK(decide_fspp({tall, {0, 0}}).fires == decide_fspp({clamp(tall), {0, 0}}).fires);

    for (uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(derive_seed(606, seed));
        Configuration config(rng.range(1, 6), rng.range(1, 6));
        for (int16_t& raw : config.raw_cells()) raw = static_cast<int16_t>(rng.range(0, 9));
        Configuration capped = clamp(config);
        for (int16_t raw : capped.raw_cells()) CHECK(raw <= 4);
        Trace full = stabilize(config).trace;
        Trace small = stabilize(capped).trace;
        for (int y = 0; y < config.height(); ++y)
            for (int x = 0; x < config.width(); ++x) {
                CHECK(full.fired({x, y}) == small.fired({x, y}));
                if (full.fired({x, y}))
                    CHECK(*full.firing_time({x, y}) == *small.firing_time({x, y}));
            }
    }
}

TEST_CASE("simplicity predicates and value_set") {
    Configuration zeros(2, 2);
    CHECK(is_simple(zeros));
    CHECK(is_a_simple(zeros, AllowedSet::of({0, 4})));

    Configuration with2 = from_rows({"20"});
    CHECK_FALSE(is_a_simple(with2, AllowedSet::of({0, 1, 3, 4})));
    CHECK(value_set(with2) == AllowedSet::of({0, 2}));

    Configuration frozen = from_rows({"F4"});
    CHECK_FALSE(is_simple(frozen));
    CHECK_FALSE(is_a_simple(frozen, AllowedSet::full()));
    CHECK_THROWS_AS(value_set(frozen), NotSimple);
}
