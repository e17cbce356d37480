#include "doctest.h"

#include "fspp/generate.hpp"
#include "fspp/rng.hpp"
#include "fspp/sim.hpp"
#include "fspp/textio.hpp"
#include "helpers.hpp"

using namespace fspp;
using test::from_rows;

TEST_CASE("parse_config reads a minimal grid") {
    Configuration c = parse_config("FSPP 1\n1 1\n4\n");
    CHECK(c.width() == 1);
    CHECK(c.height() == 1);
    CHECK(c.at({0, 0}).grains() == 4);
}

TEST_CASE("rows are listed top first; origin is bottom-left") {
    Configuration c = parse_config("FSPP 1\n2 2\n0 1\n2 3\n");
    CHECK(c.at({0, 1}).grains() == 0);
    CHECK(c.at({1, 1}).grains() == 1);
    CHECK(c.at({0, 0}).grains() == 2);
    CHECK(c.at({1, 0}).grains() == 3);
}

TEST_CASE("comment lines are ignored anywhere") {
    Configuration c = parse_config(
        "# leading comment\n"
        "FSPP 1\n"
        "# between header and dims\n"
        "2 1\n"
        "  # indented comment\n"
        "4 0\n"
        "# trailing\n");
    CHECK(c.at({0, 0}).grains() == 4);
    CHECK(c.at({1, 0}).grains() == 0);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_config("FSPP 1\n2 1\n4 5\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 2);
        CHECK(std::string(e.what()).find("'5'") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_config("FSPP 2\n1 1\n0\n"), ParseError);           // bad magic
    CHECK_THROWS_AS(parse_config("FSPP 1\n0 1\n"), ParseError);              // zero dim
    CHECK_THROWS_AS(parse_config("FSPP 1\n2 1\n4\n"), ParseError);           // short row
    CHECK_THROWS_AS(parse_config("FSPP 1\n1 1\n4\n4\n"), ParseError);        // trailing row
    CHECK_THROWS_AS(parse_config("FSPP 1\n1 2\n4\n"), ParseError);           // missing row
    CHECK_THROWS_AS(parse_config(""), ParseError);                           // empty input
}

TEST_CASE("placeholder and MACRO are rejected unless explicitly allowed") {
    const std::string macro_text = "FSPP 1\nMACRO R234_24 value_2\n1 1\na\n";
    CHECK_THROWS_AS(parse_config(macro_text), ParseError);

    ParseOptions options{.allow_frozen = false, .allow_placeholder = true, .allow_macro = true};
    RawGrid raw = parse_raw(macro_text, options);
    REQUIRE(raw.macro.has_value());
    CHECK(raw.macro->reduction_id == "R234_24");
    CHECK(raw.macro->case_id == "value_2");
    CHECK(raw.at({0, 0}) == kPlaceholder);

    CHECK_THROWS_AS(parse_raw("FSPP 1\n1 1\nF\n", options), ParseError);  // frozen disallowed
}

TEST_CASE("serialize_config round-trips mixed frozen/grain grids") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(derive_seed(1201, seed));
        GenSpec spec;
        spec.width = rng.range(1, 9);
        spec.height = rng.range(1, 9);
        spec.alphabet = AllowedSet::full();
        spec.seed = rng.next();
        Configuration config = generate(spec);
        if (seed % 2) config = stabilize(config).config;  // mix in Frozen cells
        Configuration back = parse_config(serialize_config(config));
        CHECK(back == config);
    }
}

TEST_CASE("render prints rows top first with F for Frozen") {
    Configuration c = from_rows({"F4", "03"});
    CHECK(render(c) == "F 4\n0 3\n");
    CHECK(serialize_config(c) == "FSPP 1\n2 2\nF 4\n0 3\n");
}

TEST_CASE("render_trace prints firing times with dots for quiet cells") {
    Trace trace = stabilize(from_rows({"433"})).trace;
    CHECK(render_trace(trace) == "0 1 2\n");

    Trace quiet = stabilize(from_rows({"303"})).trace;
    CHECK(render_trace(quiet) == ". . .\n");
}

TEST_CASE("read_file throws a useful error for missing paths") {
    CHECK_THROWS_AS(read_file("/nonexistent/fspp-test-file.grid"), Error);
}
