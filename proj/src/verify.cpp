#include "fspp/verify.hpp"

#include <unistd.h>

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "json.hpp"

#include "fspp/deciders.hpp"
#include "fspp/generate.hpp"
#include "fspp/reductions.hpp"
#include "fspp/rng.hpp"
#include "fspp/sim.hpp"
#include "fspp/textio.hpp"

namespace fspp {

namespace {

struct Subject {
    std::string name;
    AllowedSet alphabet;              // instances are generated over this set
    std::vector<ReductionId> chain;   // empty for deciders
};

std::vector<Subject> subject_registry() {
    std::vector<Subject> subjects = {
        {"decide_04", AllowedSet::of({0, 4}), {}},
        {"decide_014", AllowedSet::of({0, 1, 4}), {}},
        {"decide_034", AllowedSet::of({0, 3, 4}), {}},
        {"decide_24", AllowedSet::of({2, 4}), {}},
        {"decide_234", AllowedSet::of({2, 3, 4}), {}},
    };
    for (ReductionId id : all_reductions())
        subjects.push_back({to_string(id), reduction_info(id).source, {id}});
    subjects.push_back({"R_0124+R0124_124", AllowedSet::full(),
                        {ReductionId::R_0124, ReductionId::R0124_124}});
    subjects.push_back({"R_0234+R0234_024", AllowedSet::full(),
                        {ReductionId::R_0234, ReductionId::R0234_024}});
    return subjects;
}

const Subject& find_subject(const std::string& name) {
    static const std::vector<Subject> subjects = subject_registry();
    for (const Subject& s : subjects)
        if (s.name == name) return s;
    throw UnknownSubject("no decider or reduction named '" + name + "'");
}

bool run_decider(const std::string& name, const Query& query, const MacrocellLibrary& lib) {
    if (name == "decide_04") return decide_04(query);
    if (name == "decide_014") return decide_014(query, nullptr);
    if (name == "decide_034") return decide_034(query);
    if (name == "decide_24") return decide_24(query);
    if (name == "decide_234") return decide_234(query, lib);
    throw UnknownSubject("no decider named '" + name + "'");
}

std::string group_of(ReductionId id) { return reduction_info(id).pattern_group; }

// Cases instantiated anywhere by any layer; a data-file corruption can only
// change answers of trials that placed the corrupted case, so this set always
// contains the culprit.
std::set<std::string> used_cases(const Provenance& prov) {
    std::set<std::string> out;
    for (const ProvenanceLayer& layer : prov.layers())
        for (const std::string& case_id : layer.case_ids)
            out.insert(group_of(layer.id) + "/" + case_id);
    return out;
}

// Narrow the suspect list: a healthy reduction makes the representative of
// every source cell fire exactly when the source cell does, so blocks whose
// representative disagrees are implicated, together with the blocks feeding
// them (a corrupted block often keeps its own representative honest while it
// starves or ignites a neighbor). Falls back to every placed case when the
// proxy sees nothing (the equivalence is only certified for the questioned
// cell, so the proxy is a recall heuristic).
std::vector<std::string> localize_suspects(const Configuration& source,
                                           const ReducedInstance& reduced) {
    const Trace source_trace = stabilize(source).trace;
    const Trace reduced_trace = stabilize(reduced.config).trace;
    std::set<std::string> narrowed;
    for (int y = 0; y < source.height(); ++y)
        for (int x = 0; x < source.width(); ++x) {
            const Coord s{x, y};
            if (source_trace.fired(s) == reduced_trace.fired(reduced.provenance.representative(s)))
                continue;
            Coord pos = s;
            for (const ProvenanceLayer& layer : reduced.provenance.layers()) {
                narrowed.insert(group_of(layer.id) + "/" + layer.case_at(pos));
                for (Coord d : kNeighborOffsets) {
                    const Coord n{pos.x + d.x, pos.y + d.y};
                    if (n.x < 0 || n.y < 0 || n.x >= layer.source_width ||
                        n.y >= layer.source_height)
                        continue;
                    narrowed.insert(group_of(layer.id) + "/" + layer.case_at(n));
                }
                pos = {layer.block_origin(pos).x + layer.rep_offset_at(pos).x,
                       layer.block_origin(pos).y + layer.rep_offset_at(pos).y};
            }
        }
    const std::set<std::string>& chosen = narrowed.empty() ? used_cases(reduced.provenance)
                                                           : narrowed;
    return {chosen.begin(), chosen.end()};
}

struct Check {
    Configuration config;
    Coord cell;
    uint64_t seed = 0;
};

Check make_random_check(const Subject& subject, const VerifyOptions& options, int trial) {
    Check check;
    check.seed = derive_seed(options.seed, static_cast<uint64_t>(trial));
    Rng rng(check.seed);
    GenSpec spec;
    spec.width = rng.range(1, options.max_width);
    spec.height = rng.range(1, options.max_height);
    spec.alphabet = subject.alphabet;
    spec.seed = rng.next();
    check.config = generate(spec);
    check.cell = {static_cast<int>(rng.below(static_cast<uint64_t>(spec.width))),
                  static_cast<int>(rng.below(static_cast<uint64_t>(spec.height)))};
    return check;
}

// Exhaustive mode: every A-simple 3x3 instance, every questioned cell. The
// flat index doubles as the reproduction seed.
Check make_exhaustive_check(const Subject& subject, uint64_t flat) {
    const std::vector<int> values = subject.alphabet.values();
    const uint64_t cell_index = flat % 9;
    uint64_t code = flat / 9;
    Check check;
    check.seed = flat;
    check.config = Configuration(3, 3);
    for (int i = 0; i < 9; ++i) {
        check.config.raw_cells()[i] = static_cast<int16_t>(values[code % values.size()]);
        code /= values.size();
    }
    check.cell = {static_cast<int>(cell_index) % 3, static_cast<int>(cell_index) / 3};
    return check;
}

uint64_t exhaustive_total(const Subject& subject) {
    uint64_t instances = 1;
    for (int i = 0; i < 9; ++i) instances *= subject.alphabet.values().size();
    return instances * 9;
}

std::optional<VerifyFailure> run_check(const Subject& subject, const Check& check, int trial,
                                       const MacrocellLibrary& lib) {
    const Query query{check.config, check.cell};
    const bool expected = decide_fspp(query).fires;
    std::string got;
    std::vector<std::string> suspects;
    bool ok = false;
    try {
        if (subject.chain.empty()) {
            const bool answer = run_decider(subject.name, query, lib);
            ok = answer == expected;
            got = answer ? "YES" : "NO";
        } else {
            const ReducedInstance reduced = compose(subject.chain, query, lib);
            const bool answer = decide_fspp({reduced.config, reduced.cell}).fires;
            ok = answer == expected;
            got = answer ? "YES" : "NO";
            if (!ok) suspects = localize_suspects(check.config, reduced);
        }
    } catch (const std::exception& e) {
        got = std::string("ERROR: ") + e.what();
    }
    if (ok) return std::nullopt;
    VerifyFailure failure;
    failure.seed = check.seed;
    failure.trial = trial;
    failure.instance = serialize_config(check.config);
    failure.cell = check.cell;
    failure.expected = expected ? "YES" : "NO";
    failure.got = got;
    failure.suspects = std::move(suspects);
    return failure;
}

void parallel_trials(uint64_t total, int workers, const std::function<void(uint64_t)>& body) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned count = workers > 0 ? static_cast<unsigned>(workers) : hw;
    count = std::min<uint64_t>(count, total);
    if (count <= 1) {
        for (uint64_t i = 0; i < total; ++i) body(i);
        return;
    }
    std::atomic<uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (uint64_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) body(i);
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<std::string> verify_subject_names() {
    std::vector<std::string> names;
    for (const Subject& s : subject_registry()) names.push_back(s.name);
    return names;
}

VerifyReport run_verify(const std::string& subject_name, const VerifyOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const Subject& subject = find_subject(subject_name);
    const MacrocellLibrary lib =
        MacrocellLibrary::load(options.data_dir.empty() ? default_data_dir() : options.data_dir);

    const uint64_t total = options.exhaustive_3x3 ? exhaustive_total(subject)
                                                  : static_cast<uint64_t>(options.trials);
    std::vector<std::optional<VerifyFailure>> slots(total);
    parallel_trials(total, options.workers, [&](uint64_t i) {
        const Check check = options.exhaustive_3x3
                                ? make_exhaustive_check(subject, i)
                                : make_random_check(subject, options, static_cast<int>(i));
        slots[i] = run_check(subject, check, static_cast<int>(i), lib);
    });

    VerifyReport report;
    report.subject = subject.name;
    report.trials = static_cast<int>(total);
    for (std::optional<VerifyFailure>& slot : slots)
        if (slot) report.failures.push_back(std::move(*slot));
    if (options.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        report.wall_ms = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    return report;
}

std::string to_json(const VerifyReport& report) {
    nlohmann::json failures = nlohmann::json::array();
    for (const VerifyFailure& f : report.failures)
        failures.push_back({{"seed", f.seed},
                            {"trial", f.trial},
                            {"instance", f.instance},
                            {"cell", {f.cell.x, f.cell.y}},
                            {"expected", f.expected},
                            {"got", f.got},
                            {"suspects", f.suspects}});
    nlohmann::json out = {{"subject", report.subject},
                          {"trials", report.trials},
                          {"failures", std::move(failures)}};
    if (report.wall_ms >= 0) out["wall_ms"] = report.wall_ms;
    return out.dump(2);
}

namespace {

std::string serialize_raw(const RawGrid& raw) {
    std::string out = "FSPP 1\n";
    if (raw.macro) out += "MACRO " + raw.macro->reduction_id + " " + raw.macro->case_id + "\n";
    out += std::to_string(raw.width) + " " + std::to_string(raw.height) + "\n";
    for (int y = raw.height - 1; y >= 0; --y) {
        for (int x = 0; x < raw.width; ++x) {
            if (x) out += " ";
            const int16_t v = raw.at({x, y});
            if (v == kPlaceholder)
                out += "a";
            else if (v == -1)
                out += "F";
            else
                out += std::to_string(v);
        }
        out += "\n";
    }
    return out;
}

// Cells to try corrupting, most damaging first: for each target value
// (largest first) every cell that does not already hold it, in scan order —
// a spontaneous firing breaks equivalence almost anywhere. The search stops
// at the first corruption that is both noticed and localized, so the full
// list is only walked for blocks whose cells are mostly redundant.
std::vector<std::pair<size_t, int16_t>> corruption_candidates(const RawGrid& raw,
                                                              AllowedSet target) {
    std::vector<int> values = target.values();
    std::vector<std::pair<size_t, int16_t>> out;
    for (auto it = values.rbegin(); it != values.rend(); ++it)
        for (size_t i = 0; i < raw.cells.size(); ++i)
            if (raw.cells[i] != kPlaceholder && raw.cells[i] != *it)
                out.push_back({i, static_cast<int16_t>(*it)});
    return out;
}

}  // namespace

std::vector<NegativeControlResult> run_negative_controls(const VerifyOptions& options) {
    namespace fs = std::filesystem;
    const fs::path data_dir = options.data_dir.empty() ? default_data_dir() : options.data_dir;

    std::vector<fs::path> files;
    for (const fs::directory_entry& entry : fs::recursive_directory_iterator(data_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".grid")
            files.push_back(fs::relative(entry.path(), data_dir));
    std::sort(files.begin(), files.end());

    const ParseOptions parse_options{.allow_frozen = false,
                                     .allow_placeholder = true,
                                     .allow_macro = true};
    std::vector<NegativeControlResult> results;
    int control_index = 0;
    for (const fs::path& file : files) {
        const RawGrid raw = parse_raw(read_file((data_dir / file).string()), parse_options);
        if (!raw.macro) continue;
        const std::optional<ReductionId> owner = reduction_from_string(raw.macro->reduction_id);
        if (!owner) continue;  // the diode block is certified by its own truth table

        NegativeControlResult result;
        result.file = file.generic_string();
        result.subject = to_string(*owner);
        result.case_id = raw.macro->case_id;

        const fs::path copy_dir = fs::temp_directory_path() /
                                  ("fspp-negctl-" + std::to_string(::getpid()) + "-" +
                                   std::to_string(control_index++));
        fs::remove_all(copy_dir);
        fs::copy(data_dir, copy_dir, fs::copy_options::recursive);

        VerifyOptions control_options = options;
        control_options.data_dir = copy_dir;
        control_options.timing = false;
        const std::string wanted =
            group_of(*owner) + "/" + result.case_id;
        const std::vector<std::pair<size_t, int16_t>> candidates =
            corruption_candidates(raw, reduction_info(*owner).target);
        // A corruption is only visible on trials whose geometry exercises the
        // corrupted case critically; heavily insulated blocks need rare
        // geometries, so sweep the candidates under fresh instance streams
        // until one corruption is both noticed and localized.
        constexpr int kMaxStreams = 40;
        for (int stream = 0; stream < kMaxStreams; ++stream) {
            control_options.seed =
                stream == 0 ? options.seed
                            : derive_seed(options.seed, 0x6e656763u + static_cast<uint64_t>(stream));
            for (const auto& [cell, value] : candidates) {
                RawGrid corrupted = raw;
                corrupted.cells[cell] = value;
                std::ofstream out(copy_dir / file);
                out << serialize_raw(corrupted);
                out.close();

                const VerifyReport report = run_verify(result.subject, control_options);
                int failures = static_cast<int>(report.failures.size());
                bool localized = false;
                for (const VerifyFailure& f : report.failures)
                    for (const std::string& suspect : f.suspects)
                        if (suspect == wanted) localized = true;
                // Keep the most conclusive corruption seen so far.
                if (failures > 0 && (result.failures == 0 || (localized && !result.localized))) {
                    result.failures = failures;
                    result.localized = localized;
                    result.seed = control_options.seed;
                }
                if (result.failures > 0 && result.localized) break;
            }
            if (result.failures > 0 && result.localized) break;
        }
        fs::remove_all(copy_dir);
        results.push_back(result);
    }
    return results;
}

}  // namespace fspp
