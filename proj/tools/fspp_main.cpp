#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fspp/deciders.hpp"
#include "fspp/diode.hpp"
#include "fspp/generate.hpp"
#include "fspp/reductions.hpp"
#include "fspp/sim.hpp"
#include "fspp/textio.hpp"
#include "fspp/verify.hpp"

namespace {

std::string load_input(const std::string& path) {
    if (path != "-") return fspp::read_file(path);
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

uint64_t seed_from_env() {
    const char* env = std::getenv("FSPP_SEED");
    if (!env || !*env) return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw fspp::Error(std::string("FSPP_SEED is not an unsigned integer: ") + env);
    }
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::istringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            size_t used = 0;
            const int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw fspp::Error(std::string(what) + " has a non-integer entry '" + token + "'");
        }
    }
    if (out.empty()) throw fspp::Error(std::string(what) + " is empty");
    return out;
}

std::vector<fspp::ReductionId> parse_chain(const std::string& text) {
    std::vector<fspp::ReductionId> chain;
    std::istringstream stream(text);
    std::string token;
    while (std::getline(stream, token, '+')) {
        const std::optional<fspp::ReductionId> id = fspp::reduction_from_string(token);
        if (!id) throw fspp::Error("unknown reduction '" + token + "'");
        chain.push_back(*id);
    }
    if (chain.empty()) throw fspp::Error("empty reduction chain");
    return chain;
}

fspp::MacrocellLibrary load_library(const std::string& data_dir) {
    return fspp::MacrocellLibrary::load(data_dir.empty() ? fspp::default_data_dir()
                                                         : std::filesystem::path(data_dir));
}

fspp::Coord to_coord(const std::vector<int>& cell) { return {cell[0], cell[1]}; }

int run(int argc, char** argv) {
    CLI::App app{"freezing sandpile laboratory: simulate, decide, reduce, verify"};
    app.require_subcommand(1);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run the parallel dynamics to the fixpoint");
    std::string sim_input;
    int sim_steps = -1;
    bool sim_trace = false;
    simulate->add_option("input", sim_input, "grid file, - for stdin")->required();
    simulate->add_option("--steps", sim_steps, "run exactly this many steps instead");
    simulate->add_flag("--trace", sim_trace, "print firing times instead of the final grid");

    // decide
    auto* decide = app.add_subcommand("decide", "does the questioned cell ever fire?");
    std::string dec_input, dec_method = "auto", dec_data_dir;
    std::vector<int> dec_cell;
    int dec_cap = 16;
    bool dec_explain = false;
    decide->add_option("input", dec_input, "grid file, - for stdin")->required();
    decide->add_option("--cell", dec_cell, "questioned cell X Y (bottom-left origin)")
        ->required()
        ->expected(2);
    decide->add_option("--method", dec_method, "auto | sim | special | tt")
        ->check(CLI::IsMember({"auto", "sim", "special", "tt"}));
    decide->add_option("--cap", dec_cap, "value-2 cap for --method tt");
    decide->add_option("--data-dir", dec_data_dir, "macrocell data directory");
    decide->add_flag("--explain", dec_explain, "print the routed method first");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "rewrite an instance over a smaller alphabet");
    std::string red_input, red_id, red_data_dir;
    std::vector<int> red_cell;
    reduce->add_option("input", red_input, "grid file, - for stdin")->required();
    reduce->add_option("--cell", red_cell, "questioned cell X Y")->required()->expected(2);
    reduce->add_option("--id", red_id, "reduction id, chained with + (e.g. R_0124+R0124_124)")
        ->required();
    reduce->add_option("--data-dir", red_data_dir, "macrocell data directory");

    // verify
    auto* verify = app.add_subcommand("verify", "certify deciders and reductions against the oracle");
    std::string ver_subject, ver_data_dir;
    fspp::VerifyOptions ver_options;
    ver_options.seed = seed_from_env();
    bool ver_all = false, ver_list = false, ver_controls = false;
    verify->add_option("subject", ver_subject, "decider or reduction name");
    verify->add_flag("--all", ver_all, "verify every registered subject");
    verify->add_flag("--list", ver_list, "list subject names and exit");
    verify->add_flag("--negative-controls", ver_controls,
                     "corrupt each macrocell file and require the harness to notice");
    verify->add_option("--trials", ver_options.trials, "random trials per subject");
    verify->add_option("--max-width", ver_options.max_width, "widest random instance");
    verify->add_option("--max-height", ver_options.max_height, "tallest random instance");
    verify->add_option("--seed", ver_options.seed, "master seed (default FSPP_SEED or 0)");
    verify->add_option("--workers", ver_options.workers, "worker threads, 0 = hardware");
    verify->add_flag("--exhaustive-3x3", ver_options.exhaustive_3x3,
                     "every instance over the subject alphabet on the 3x3 grid");
    verify->add_flag("--timing", ver_options.timing, "include wall time in reports");
    verify->add_option("--data-dir", ver_data_dir, "macrocell data directory");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
    fspp::GenSpec gen_spec;
    std::string gen_alphabet = "0,1,2,3,4", gen_weights;
    gen_spec.seed = seed_from_env();
    gen->add_option("--width", gen_spec.width, "grid width")->required();
    gen->add_option("--height", gen_spec.height, "grid height")->required();
    gen->add_option("--alphabet", gen_alphabet, "allowed values, e.g. 0,2,4");
    gen->add_option("--weights", gen_weights, "per-value weights aligned with --alphabet");
    gen->add_option("--seed", gen_spec.seed, "seed (default FSPP_SEED or 0)");

    // render
    auto* render_cmd = app.add_subcommand("render", "pretty-print a grid file");
    std::string ren_input;
    bool ren_trace = false;
    render_cmd->add_option("input", ren_input, "grid file, - for stdin")->required();
    render_cmd->add_flag("--trace", ren_trace, "stabilize and print firing times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (simulate->parsed()) {
        fspp::Configuration config = fspp::parse_config(load_input(sim_input));
        if (sim_steps >= 0) {
            for (int i = 0; i < sim_steps; ++i) config = fspp::step(config);
            std::cout << fspp::render(config);
            return 0;
        }
        const fspp::StabilizeResult result = fspp::stabilize(config);
        std::cout << (sim_trace ? fspp::render_trace(result.trace) : fspp::render(result.config));
        return 0;
    }

    if (decide->parsed()) {
        const fspp::Configuration config = fspp::parse_config(load_input(dec_input));
        const fspp::Query query{config, to_coord(dec_cell)};
        query.validate();
        bool answer = false;
        std::string method;
        if (dec_method == "sim") {
            answer = fspp::decide_fspp(query).fires;
            method = "sim";
        } else if (dec_method == "tt") {
            const fspp::MacrocellLibrary lib = load_library(dec_data_dir);
            const fspp::TruthTableDecision decision =
                fspp::truth_table_decide_0134(query, lib, dec_cap);
            answer = decision.fires;
            method = "truth-table k=" + std::to_string(decision.two_count);
        } else {
            const std::optional<std::string> special = fspp::special_decider_for(config);
            if (special) {
                const fspp::MacrocellLibrary lib = load_library(dec_data_dir);
                answer = fspp::decide_special(query, lib, nullptr);
                method = *special;
            } else if (dec_method == "special") {
                throw fspp::Error("no specialized decider for alphabet " +
                                  fspp::value_set(config).to_string());
            } else {
                answer = fspp::decide_fspp(query).fires;
                method = "sim";
            }
        }
        if (dec_explain) std::cout << "method " << method << "\n";
        std::cout << (answer ? "YES" : "NO") << "\n";
        return answer ? 10 : 0;
    }

    if (reduce->parsed()) {
        const fspp::Configuration config = fspp::parse_config(load_input(red_input));
        const std::vector<fspp::ReductionId> chain = parse_chain(red_id);
        const fspp::MacrocellLibrary lib = load_library(red_data_dir);
        const fspp::ReducedInstance reduced =
            fspp::compose(chain, {config, to_coord(red_cell)}, lib);
        std::cout << "# cell " << reduced.cell.x << " " << reduced.cell.y << "\n"
                  << fspp::serialize_config(reduced.config);
        return 0;
    }

    if (verify->parsed()) {
        ver_options.data_dir = ver_data_dir;
        if (ver_list) {
            for (const std::string& name : fspp::verify_subject_names()) std::cout << name << "\n";
            return 0;
        }
        if (ver_controls) {
            const std::vector<fspp::NegativeControlResult> controls =
                fspp::run_negative_controls(ver_options);
            nlohmann::json out = nlohmann::json::array();
            bool ok = !controls.empty();
            for (const fspp::NegativeControlResult& c : controls) {
                const bool noticed = c.failures > 0 && c.localized;
                ok = ok && noticed;
                out.push_back({{"file", c.file},
                               {"subject", c.subject},
                               {"case", c.case_id},
                               {"failures", c.failures},
                               {"localized", c.localized},
                               {"seed", c.seed},
                               {"noticed", noticed}});
            }
            std::cout << out.dump(2) << "\n";
            return ok ? 0 : 1;
        }
        if (ver_all) {
            nlohmann::json out = nlohmann::json::array();
            bool clean = true;
            for (const std::string& name : fspp::verify_subject_names()) {
                const fspp::VerifyReport report = fspp::run_verify(name, ver_options);
                clean = clean && report.failures.empty();
                out.push_back(nlohmann::json::parse(fspp::to_json(report)));
            }
            std::cout << out.dump(2) << "\n";
            return clean ? 0 : 1;
        }
        if (ver_subject.empty())
            throw fspp::Error("verify needs a subject, --all, --list or --negative-controls");
        const fspp::VerifyReport report = fspp::run_verify(ver_subject, ver_options);
        std::cout << fspp::to_json(report) << "\n";
        return report.failures.empty() ? 0 : 1;
    }

    if (gen->parsed()) {
        const std::vector<int> values = parse_int_list(gen_alphabet, "--alphabet");
        for (int v : values) gen_spec.alphabet.add(v);
        if (!gen_weights.empty()) {
            const std::vector<int> weights = parse_int_list(gen_weights, "--weights");
            if (weights.size() != values.size())
                throw fspp::Error("--weights must list one weight per --alphabet value");
            for (size_t i = 0; i < values.size(); ++i) gen_spec.weights[values[i]] = weights[i];
        }
        std::cout << fspp::serialize_config(fspp::generate(gen_spec));
        return 0;
    }

    if (render_cmd->parsed()) {
        const fspp::Configuration config = fspp::parse_config(load_input(ren_input));
        if (ren_trace)
            std::cout << fspp::render_trace(fspp::stabilize(config).trace);
        else
            std::cout << fspp::render(config);
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
