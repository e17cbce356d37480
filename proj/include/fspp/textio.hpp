#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fspp/grid.hpp"
#include "fspp/sim.hpp"

namespace fspp {

// Grid text format:
//   FSPP 1
//   [MACRO <reduction-id> <case>]      (macrocell data files only)
//   <width> <height>
//   <height> rows of <width> tokens, TOP row first
// Tokens are 0..4, F (Frozen, dumps only) or a (placeholder, macrocell data
// files only). Lines starting with # are ignored anywhere.

struct MacroHeader {
    std::string reduction_id;
    std::string case_id;
};

struct RawGrid {
    int width = 0;
    int height = 0;
    // Row-major, bottom-left origin: -1 Frozen, -2 placeholder, else 0..4.
    std::vector<int16_t> cells;
    std::optional<MacroHeader> macro;

    int16_t at(Coord c) const { return cells[static_cast<size_t>(c.y) * width + c.x]; }
};

struct ParseOptions {
    bool allow_frozen = true;
    bool allow_placeholder = false;
    bool allow_macro = false;
};

inline constexpr int16_t kPlaceholder = -2;

RawGrid parse_raw(const std::string& text, const ParseOptions& options);

// Plain configuration: no placeholder, no MACRO header.
Configuration parse_config(const std::string& text);

std::string serialize_config(const Configuration& config);

// Terminal-friendly rows (top first) without the header. Frozen prints F.
std::string render(const Configuration& config);

// Firing times per cell, '.' where the cell never fired.
std::string render_trace(const Trace& trace);

std::string read_file(const std::string& path);

}  // namespace fspp
