#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fspp/grid.hpp"
#include "fspp/textio.hpp"

namespace fspp {

// A rectangular block pattern, possibly with one `a` placeholder that gets
// substituted by a concrete value when the block is instantiated.
struct Pattern {
    int width = 0;
    int height = 0;
    std::vector<int16_t> cells;  // 0..4 or kPlaceholder
    int16_t at(Coord c) const { return cells[static_cast<size_t>(c.y) * width + c.x]; }
};

struct Macrocell {
    std::string reduction_id;  // as written in the MACRO header
    std::string case_id;
    Pattern pattern;
    Coord questioned_offset;  // representative cell inside the block

    bool has_placeholder() const;
    // Substitute the placeholder (if any) with `value` and return the block
    // as a configuration.
    Configuration instantiate(int value) const;
};

// All macrocell patterns under a data directory (recursively, *.grid files
// carrying a MACRO header), keyed by (reduction id, case id).
class MacrocellLibrary {
  public:
    static MacrocellLibrary load(const std::filesystem::path& dir);

    bool has(const std::string& reduction_id, const std::string& case_id) const;
    const Macrocell& get(const std::string& reduction_id, const std::string& case_id) const;
    const std::filesystem::path& dir() const { return dir_; }
    std::vector<const Macrocell*> all() const;

  private:
    std::filesystem::path dir_;
    std::map<std::pair<std::string, std::string>, Macrocell> cells_;
};

// Resolution order: explicit path argument > FSPP_DATA_DIR environment
// variable > the directory compiled in at build time.
std::filesystem::path default_data_dir();

}  // namespace fspp
