#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fspp/grid.hpp"
#include "fspp/macrocell.hpp"

namespace fspp {

// Randomized certification of every decider and reduction against the
// brute-force simulation oracle.

struct VerifyOptions {
    int trials = 200;
    int max_width = 6;
    int max_height = 6;
    uint64_t seed = 0;
    int workers = 0;           // 0 = pick from hardware_concurrency
    bool exhaustive_3x3 = false;  // deciders only: every A-simple 3x3, every cell
    bool timing = false;          // include wall time in the report (breaks byte-determinism)
    std::filesystem::path data_dir;  // empty = default_data_dir()
};

struct VerifyFailure {
    uint64_t seed = 0;  // per-trial seed; regenerates the instance
    int trial = 0;
    std::string instance;  // serialized source configuration
    Coord cell;
    std::string expected;               // "YES" / "NO"
    std::string got;                    // "YES" / "NO" / "ERROR: ..."
    std::vector<std::string> suspects;  // macrocell cases implicated (reductions only)
};

struct VerifyReport {
    std::string subject;
    int trials = 0;
    std::vector<VerifyFailure> failures;
    double wall_ms = -1;  // -1 = not measured
};

std::string to_json(const VerifyReport& report);

// Deciders, reductions and the two composed chains.
std::vector<std::string> verify_subject_names();

// Throws UnknownSubject for names outside the registry.
VerifyReport run_verify(const std::string& subject, const VerifyOptions& options);

// Data-corruption control: for every reduction pattern file, copy the data
// directory, corrupt one load-bearing cell of that file (staying inside the
// target alphabet), and re-verify the reduction that owns it. A healthy
// harness reports failures for every file and the corrupted case among the
// suspects.
struct NegativeControlResult {
    std::string file;     // path relative to the data directory
    std::string subject;  // reduction verified against the corrupted copy
    std::string case_id;  // corrupted case
    int failures = 0;
    bool localized = false;  // case_id appears in some failure's suspects
    uint64_t seed = 0;       // instance stream that exposed the corruption
};

std::vector<NegativeControlResult> run_negative_controls(const VerifyOptions& options);

}  // namespace fspp
