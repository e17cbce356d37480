#include <array>
#include <string>
#include <vector>

#include "doctest.h"

#include "fspp/deciders.hpp"
#include "fspp/generate.hpp"
#include "fspp/macrocell.hpp"
#include "fspp/rng.hpp"
#include "fspp/sim.hpp"
#include "fspp/textio.hpp"
#include "helpers.hpp"

using namespace fspp;
using test::from_rows;

namespace {

const MacrocellLibrary& library() {
    static MacrocellLibrary lib = MacrocellLibrary::load(default_data_dir());
    return lib;
}

Configuration random_simple(uint64_t seed, int max_w, int max_h, AllowedSet alphabet) {
    Rng rng(seed);
    GenSpec spec;
    spec.width = rng.range(1, max_w);
    spec.height = rng.range(1, max_h);
    spec.alphabet = alphabet;
    spec.seed = rng.next();
    return generate(spec);
}

// Enumerate every w*h configuration over the given values.
template <typename Fn>
void for_each_config(int w, int h, const std::vector<int>& values, Fn&& fn) {
    const size_t cells = static_cast<size_t>(w) * h;
    size_t total = 1;
    for (size_t i = 0; i < cells; ++i) total *= values.size();
    for (size_t index = 0; index < total; ++index) {
        Configuration config(w, h);
        size_t rest = index;
        for (size_t i = 0; i < cells; ++i) {
            config.raw_cells()[i] = static_cast<int16_t>(values[rest % values.size()]);
            rest /= values.size();
        }
        fn(config);
    }
}

void check_against_oracle(const Configuration& config, const AnswerGrid& answers) {
    Trace trace = stabilize(config).trace;
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x) {
            CAPTURE(render(config));
            CAPTURE(x);
            CAPTURE(y);
            CHECK(answers.at({x, y}) == trace.fired({x, y}));
        }
}

}  // namespace

TEST_CASE("the {0,4} decider is exact on every 3x3 instance") {
    for_each_config(3, 3, {0, 4},
                    [](const Configuration& c) { check_against_oracle(c, decide_04_all(c)); });
}

TEST_CASE("{0,4} hand cases: a 0 needs four firing neighbors") {
    CHECK(decide_04({from_rows({"4"}), {0, 0}}));
    CHECK_FALSE(decide_04({from_rows({"0"}), {0, 0}}));
    CHECK(decide_04({from_rows({"444", "404", "444"}), {1, 1}}));
    CHECK_FALSE(decide_04({from_rows({"404"}), {1, 0}}));
    CHECK_FALSE(decide_04({from_rows({"44", "04"}), {0, 0}}));
}

TEST_CASE("the bordered majority graph of a {1,4} instance") {
    Configuration config = from_rows({"44444", "41111", "14441"});
    MajorityGraph graph = reduce_14_to_smaj(config);
    CHECK(graph.vertex_count() == 35);
    CHECK(graph.edge_count() == 58);
    CHECK(graph.max_degree() == 4);

    int cells = 0, ring = 0, lit = 0;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (graph.tag(v).kind == VertexTag::Kind::Cell) {
            ++cells;
            CHECK(graph.degree(v) == 4);  // the ring pads every cell to degree 4
        } else {
            REQUIRE(graph.tag(v).kind == VertexTag::Kind::Ring);
            ++ring;
            CHECK_FALSE(graph.state(v));
        }
        if (graph.state(v)) ++lit;
    }
    CHECK(cells == 15);
    CHECK(ring == 20);
    CHECK(lit == 9);  // one per 4-cell

    // Ring vertices stay quiet through the whole run.
    smaj_run_to_fixpoint(graph);
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (graph.tag(v).kind == VertexTag::Kind::Ring) CHECK_FALSE(graph.state(v));
}

TEST_CASE("{1,4} hand cases under the majority decider") {
    CHECK_FALSE(decide_014({from_rows({"414"}), {1, 0}}));            // two feeders: 1+2 < 4
    CHECK(decide_014({from_rows({"444", "414", "444"}), {1, 1}}));    // four feeders
    CHECK(decide_014({from_rows({"4"}), {0, 0}}));
    CHECK_FALSE(decide_014({from_rows({"1"}), {0, 0}}));
}

TEST_CASE("{0,1,4} port gadgets insulate and never flip") {
    Configuration config = from_rows({"04", "14"});
    MajorityGraph graph = build_014_graph(config);
    int ports = 0;
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (graph.tag(v).kind == VertexTag::Kind::Port) ++ports;
    CHECK(ports == 4);  // one 4-cycle per 0-cell

    MajorityRunStats stats;
    AnswerGrid answers = decide_014_all(config, &stats);
    CHECK(stats.max_degree <= 4);
    CHECK_FALSE(stats.gadget_vertex_fired);
    CHECK_FALSE(answers.at({0, 1}));  // the 0 itself stays quiet here
}

TEST_CASE("the {0,1,4} decider agrees with brute force on random instances") {
    for (uint64_t trial = 0; trial < 60; ++trial) {
        AllowedSet alphabet = trial % 3 ? AllowedSet::of({0, 1, 4}) : AllowedSet::of({1, 4});
        Configuration config = random_simple(derive_seed(8100, trial), 6, 6, alphabet);
        MajorityRunStats stats;
        AnswerGrid answers = decide_014_all(config, &stats);
        check_against_oracle(config, answers);
        CHECK(stats.max_degree <= 4);
        CHECK_FALSE(stats.gadget_vertex_fired);
    }
}

TEST_CASE("the {0,3,4} decider is exact on every 3x3 instance") {
    for_each_config(3, 3, {0, 3, 4},
                    [](const Configuration& c) { check_against_oracle(c, decide_034_all(c)); });
}

TEST_CASE("{0,3,4} hand cases: reachability plus a conjunction for 0") {
    CHECK(decide_034({from_rows({"43"}), {1, 0}}));                  // 3 fed by the 4
    CHECK(decide_034({from_rows({"4333"}), {3, 0}}));                // chain keeps firing
    CHECK_FALSE(decide_034({from_rows({"3"}), {0, 0}}));
    CHECK_FALSE(decide_034({from_rows({"303"}), {0, 0}}));
    CHECK(decide_034({from_rows({"444", "404", "444"}), {1, 1}}));   // interior 0, all sides fire
    CHECK_FALSE(decide_034({from_rows({"44", "04"}), {0, 0}}));      // border 0 never fires
    CHECK_FALSE(decide_034({from_rows({"444", "004", "444"}), {1, 1}}));  // adjacent 0s starve
}

TEST_CASE("the {2,4} decider is exact on every 3x3 instance") {
    for_each_config(3, 3, {2, 4},
                    [](const Configuration& c) { check_against_oracle(c, decide_24_all(c)); });
}

TEST_CASE("{2,4} hand cases: the direct decider handles opposite feeders") {
    CHECK(decide_24({from_rows({"424"}), {1, 0}}));  // east+west deliveries reach 4
    CHECK(decide_24({from_rows({"4", "2", "4"}), {0, 1}}));
    CHECK(decide_24({from_rows({"42", "24"}), {1, 1}}));
    CHECK_FALSE(decide_24({from_rows({"42"}), {1, 0}}));
    CHECK_FALSE(decide_24({from_rows({"2"}), {0, 0}}));
}

TEST_CASE("the {2,4} decider agrees with brute force on random instances") {
    for (uint64_t trial = 0; trial < 60; ++trial) {
        Configuration config =
            random_simple(derive_seed(8200, trial), 6, 6, AllowedSet::of({2, 4}));
        check_against_oracle(config, decide_24_all(config));
    }
}

TEST_CASE("the {2,3,4} decider inherits the all-2 block's opposite-side miss") {
    // decide_234 rewrites the 3s away with the same block family the
    // instance-to-instance rewrite uses, so it inherits the known divergence:
    // a 2 fed from opposite sides fires in the original but not after the
    // rewrite.  Pinned so a fixed block family flips these expectations.
    Configuration vertical = from_rows({"4", "2", "4"});
    CHECK(decide_fspp({vertical, {0, 1}}).fires);
    CHECK_FALSE(decide_234({vertical, {0, 1}}, library()));

    // Away from that geometry it matches the oracle.
    CHECK(decide_234({from_rows({"4"}), {0, 0}}, library()));
    CHECK_FALSE(decide_234({from_rows({"2"}), {0, 0}}, library()));
    CHECK_FALSE(decide_234({from_rows({"3"}), {0, 0}}, library()));
    CHECK(decide_234({from_rows({"42", "24"}), {1, 1}}, library()));
    CHECK(decide_234({from_rows({"43"}), {1, 0}}, library()));
}

TEST_CASE("the alphabet registry lists all thirteen tracked sets") {
    auto rows = alphabet_table();
    REQUIRE(rows.size() == 13);

    struct Expect {
        AllowedSet set;
        Hardness hardness;
        const char* decider;  // nullptr = no routed decider
    };
    const std::array<Expect, 13> expect{{
        {AllowedSet::of({0, 4}), Hardness::AC0, "decide_04"},
        {AllowedSet::of({0, 3, 4}), Hardness::NL, "decide_034"},
        {AllowedSet::of({1, 4}), Hardness::NC2, "decide_014"},
        {AllowedSet::of({0, 1, 4}), Hardness::NC2, "decide_014"},
        {AllowedSet::of({2, 4}), Hardness::NC2, "decide_24"},
        {AllowedSet::of({2, 3, 4}), Hardness::NC2, "decide_234"},
        {AllowedSet::of({1, 2, 3, 4}), Hardness::FsppHard, nullptr},
        {AllowedSet::of({0, 2, 3, 4}), Hardness::FsppHard, nullptr},
        {AllowedSet::of({0, 1, 2, 4}), Hardness::FsppHard, nullptr},
        {AllowedSet::of({1, 2, 4}), Hardness::FsppHard, nullptr},
        {AllowedSet::of({0, 2, 4}), Hardness::FsppHard, nullptr},
        {AllowedSet::of({0, 1, 3, 4}), Hardness::Open, nullptr},
        {AllowedSet::of({1, 3, 4}), Hardness::Open, nullptr},
    }};
    for (size_t i = 0; i < expect.size(); ++i) {
        CAPTURE(i);
        CHECK(rows[i].set == expect[i].set);
        CHECK(rows[i].hardness == expect[i].hardness);
        if (expect[i].decider)
            CHECK(std::string(rows[i].decider) == expect[i].decider);
        else
            CHECK(rows[i].decider == nullptr);
        CHECK(rows[i].set.values().back() == 4);  // every tracked set contains 4
    }

    CHECK(std::string(to_string(Hardness::AC0)) == "AC0");
    CHECK(std::string(to_string(Hardness::NL)) == "NL");
    CHECK(std::string(to_string(Hardness::NC2)) == "NC2");
    CHECK(std::string(to_string(Hardness::FsppHard)) == "FSPP-hard");
    CHECK(std::string(to_string(Hardness::Open)) == "open");
}

TEST_CASE("auto dispatch routes by the configuration's value set") {
    auto name_for = [](const Configuration& c) { return special_decider_for(c); };
    CHECK(name_for(from_rows({"4"})) == "decide_04");
    CHECK(name_for(from_rows({"40"})) == "decide_04");
    CHECK(name_for(from_rows({"43"})) == "decide_034");
    CHECK(name_for(from_rows({"41"})) == "decide_014");
    CHECK(name_for(from_rows({"410"})) == "decide_014");
    CHECK(name_for(from_rows({"42"})) == "decide_24");
    CHECK(name_for(from_rows({"432"})) == "decide_234");
    CHECK_FALSE(name_for(from_rows({"420"})).has_value());
    CHECK_FALSE(name_for(from_rows({"431"})).has_value());
    CHECK_FALSE(name_for(from_rows({"43210"})).has_value());

    CHECK(decide_special({from_rows({"424"}), {1, 0}}, library()));
    CHECK_THROWS_AS(decide_special({from_rows({"43210"}), {0, 0}}, library()), Error);
}

TEST_CASE("per-cell deciders agree with their grid variants") {
    for (uint64_t trial = 0; trial < 8; ++trial) {
        Configuration c04 = random_simple(derive_seed(8300, trial), 5, 5, AllowedSet::of({0, 4}));
        AnswerGrid a04 = decide_04_all(c04);
        Configuration c24 = random_simple(derive_seed(8301, trial), 5, 5, AllowedSet::of({2, 4}));
        AnswerGrid a24 = decide_24_all(c24);
        Configuration c014 =
            random_simple(derive_seed(8302, trial), 5, 5, AllowedSet::of({0, 1, 4}));
        AnswerGrid a014 = decide_014_all(c014);
        Configuration c034 =
            random_simple(derive_seed(8303, trial), 5, 5, AllowedSet::of({0, 3, 4}));
        AnswerGrid a034 = decide_034_all(c034);
        for (int y = 0; y < 5; ++y)
            for (int x = 0; x < 5; ++x) {
                const Coord cell{x, y};
                if (x < c04.width() && y < c04.height())
                    CHECK(decide_04({c04, cell}) == a04.at(cell));
                if (x < c24.width() && y < c24.height())
                    CHECK(decide_24({c24, cell}) == a24.at(cell));
                if (x < c014.width() && y < c014.height())
                    CHECK(decide_014({c014, cell}) == a014.at(cell));
                if (x < c034.width() && y < c034.height())
                    CHECK(decide_034({c034, cell}) == a034.at(cell));
            }
    }
}
