#pragma once

#include <string>
#include <vector>

#include "fspp/grid.hpp"

namespace fspp::test {

// Build a configuration from single-character rows, TOP row first ('F' for
// Frozen), mirroring the text format's orientation.
inline Configuration from_rows(const std::vector<std::string>& rows) {
    const int h = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows[0].size());
    Configuration config(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const char ch = rows[y][x];
            config.set({x, h - 1 - y},
                       ch == 'F' ? CellValue::frozen() : CellValue::grains(ch - '0'));
        }
    return config;
}

}  // namespace fspp::test
