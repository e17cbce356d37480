#include "fspp/grid.hpp"

namespace fspp {

std::vector<Coord> neighbors(const Configuration& config, Coord c) {
    std::vector<Coord> out;
    out.reserve(4);
    for (const Coord& d : kNeighborOffsets) {
        Coord n{c.x + d.x, c.y + d.y};
        if (config.in_bounds(n)) out.push_back(n);
    }
    return out;
}

bool is_simple(const Configuration& config) {
    for (int16_t raw : config.raw_cells())
        if (raw < 0 || raw > 4) return false;
    return true;
}

bool is_a_simple(const Configuration& config, AllowedSet allowed) {
    for (int16_t raw : config.raw_cells())
        if (raw < 0 || raw > 4 || !allowed.contains(raw)) return false;
    return true;
}

AllowedSet value_set(const Configuration& config) {
    if (!is_simple(config)) throw NotSimple("configuration is not simple");
    AllowedSet s;
    for (int16_t raw : config.raw_cells()) s.add(raw);
    return s;
}

}  // namespace fspp
