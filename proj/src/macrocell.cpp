#include "fspp/macrocell.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace fspp {

namespace {

// Representative ("questioned") cells inside each block, transcribed from
// the highlighted cells of the block diagrams. Bottom-left origin.
const std::map<std::pair<std::string, std::string>, Coord>& questioned_offsets() {
    static const std::map<std::pair<std::string, std::string>, Coord> table = {
        {{"R234_24", "value_2"}, {0, 0}},      {{"R234_24", "value_3"}, {0, 0}},
        {{"R234_24", "value_4"}, {0, 0}},

        {{"R_1234", "value_a"}, {2, 2}},       {{"R_1234", "value_0"}, {2, 2}},
        {{"R_1234", "questioned_0"}, {2, 2}},

        {{"R_0234", "value_a"}, {2, 2}},       {{"R_0234", "value_1"}, {2, 2}},
        {{"R_0234", "questioned_1"}, {1, 3}},

        {{"R_0124", "value_a"}, {3, 3}},       {{"R_0124", "value_3"}, {3, 3}},

        {{"R0124_124", "value_a"}, {2, 3}},    {{"R0124_124", "value_0"}, {2, 3}},
        {{"R0124_124", "questioned_0"}, {2, 3}},

        {{"R0134_134", "value_0"}, {1, 1}},    {{"R0134_134", "value_1"}, {1, 1}},
        {{"R0134_134", "value_3"}, {1, 1}},    {{"R0134_134", "value_4"}, {1, 1}},
        {{"R0134_134", "inflated_0"}, {3, 3}}, {{"R0134_134", "inflated_1"}, {3, 3}},
        {{"R0134_134", "inflated_3"}, {3, 3}}, {{"R0134_134", "inflated_4"}, {3, 3}},
        {{"R0134_134", "questioned_0"}, {1, 3}},

        {{"TT_0134", "diode"}, {10, 10}},
    };
    return table;
}

}  // namespace

bool Macrocell::has_placeholder() const {
    return std::find(pattern.cells.begin(), pattern.cells.end(), kPlaceholder) !=
           pattern.cells.end();
}

Configuration Macrocell::instantiate(int value) const {
    Configuration out(pattern.width, pattern.height);
    auto& cells = out.raw_cells();
    for (size_t i = 0; i < pattern.cells.size(); ++i)
        cells[i] = pattern.cells[i] == kPlaceholder ? static_cast<int16_t>(value)
                                                    : pattern.cells[i];
    return out;
}

MacrocellLibrary MacrocellLibrary::load(const std::filesystem::path& dir) {
    MacrocellLibrary lib;
    lib.dir_ = dir;
    if (!std::filesystem::is_directory(dir))
        throw Error("macrocell data directory not found: " + dir.string());

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".grid")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    ParseOptions options;
    options.allow_frozen = false;
    options.allow_placeholder = true;
    options.allow_macro = true;
    for (const auto& path : files) {
        RawGrid raw = parse_raw(read_file(path.string()), options);
        if (!raw.macro) throw Error("macrocell file lacks a MACRO header: " + path.string());
        Macrocell cell;
        cell.reduction_id = raw.macro->reduction_id;
        cell.case_id = raw.macro->case_id;
        cell.pattern = Pattern{raw.width, raw.height, raw.cells};

        auto key = std::make_pair(cell.reduction_id, cell.case_id);
        auto offset = questioned_offsets().find(key);
        if (offset == questioned_offsets().end())
            throw Error("unknown macrocell case '" + cell.reduction_id + "/" + cell.case_id +
                        "' in " + path.string());
        cell.questioned_offset = offset->second;
        if (!lib.cells_.emplace(key, std::move(cell)).second)
            throw Error("duplicate macrocell '" + key.first + "/" + key.second + "' in " +
                        path.string());
    }
    if (lib.cells_.empty()) throw Error("no macrocell files under " + dir.string());
    return lib;
}

bool MacrocellLibrary::has(const std::string& reduction_id, const std::string& case_id) const {
    return cells_.count({reduction_id, case_id}) > 0;
}

const Macrocell& MacrocellLibrary::get(const std::string& reduction_id,
                                       const std::string& case_id) const {
    auto it = cells_.find({reduction_id, case_id});
    if (it == cells_.end())
        throw Error("macrocell '" + reduction_id + "/" + case_id + "' not in the library");
    return it->second;
}

std::vector<const Macrocell*> MacrocellLibrary::all() const {
    std::vector<const Macrocell*> out;
    out.reserve(cells_.size());
    for (const auto& [key, cell] : cells_) out.push_back(&cell);
    return out;
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("FSPP_DATA_DIR"); env && *env) return env;
#ifdef FSPP_SOURCE_DATA_DIR
    return FSPP_SOURCE_DATA_DIR;
#else
    return "data/macrocells";
#endif
}

}  // namespace fspp
