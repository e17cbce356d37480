#include "fspp/boolnet.hpp"

#include <sstream>

#include "fspp/sim.hpp"

namespace fspp {

const char* local_function_name(LocalFunction f) {
    switch (f) {
        case LocalFunction::And: return "And";
        case LocalFunction::StrictMajority: return "StrictMajority";
        case LocalFunction::NonStrictMajority: return "NonStrictMajority";
        case LocalFunction::Or: return "Or";
        case LocalFunction::One: return "One";
    }
    return "?";
}

BoolConfig phi(const Configuration& config) {
    BoolConfig out(config.width(), config.height());
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x)
            out.set({x, y}, config.at({x, y}).is_frozen());
    return out;
}

BooleanNetwork build_network(const Configuration& config) {
    if (!is_simple(config))
        throw NotSimple("only simple configurations (all values in 0..4) map to a network");
    BooleanNetwork net(config.width(), config.height());
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x) {
            switch (config.at({x, y}).grains()) {
                case 0: net.set({x, y}, LocalFunction::And); break;
                case 1: net.set({x, y}, LocalFunction::StrictMajority); break;
                case 2: net.set({x, y}, LocalFunction::NonStrictMajority); break;
                case 3: net.set({x, y}, LocalFunction::Or); break;
                case 4: net.set({x, y}, LocalFunction::One); break;
            }
        }
    return net;
}

BoolConfig bn_step(const BooleanNetwork& net, const BoolConfig& state) {
    const int w = net.width();
    const int h = net.height();
    BoolConfig out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const Coord c{x, y};
            if (state.at(c)) {  // every local function freezes
                out.set(c, true);
                continue;
            }
            int ones = 0;
            for (const Coord& d : kNeighborOffsets) {
                const Coord n{x + d.x, y + d.y};
                if (n.x >= 0 && n.x < w && n.y >= 0 && n.y < h && state.at(n)) ++ones;
            }
            bool next = false;
            switch (net.at(c)) {
                case LocalFunction::And: next = ones == 4; break;
                case LocalFunction::StrictMajority: next = ones > 2; break;
                case LocalFunction::NonStrictMajority: next = ones >= 2; break;
                case LocalFunction::Or: next = ones >= 1; break;
                case LocalFunction::One: next = true; break;
            }
            out.set(c, next);
        }
    return out;
}

bool check_commutation(const Configuration& config, std::optional<int> horizon) {
    BooleanNetwork net = build_network(config);  // NotSimple for bad inputs
    const int limit = horizon.value_or(config.width() * config.height());
    Configuration sand = config;
    BoolConfig bool_state = phi(config);
    if (bool_state != phi(sand)) return false;
    for (int t = 1; t <= limit; ++t) {
        Configuration next_sand = step(sand);
        BoolConfig next_bool = bn_step(net, bool_state);
        if (next_bool != phi(next_sand)) return false;
        const bool fixed = next_sand == sand && next_bool == bool_state;
        sand = std::move(next_sand);
        bool_state = std::move(next_bool);
        if (fixed) break;
    }
    return true;
}

std::string format_network(const BooleanNetwork& net) {
    std::ostringstream out;
    for (int y = net.height() - 1; y >= 0; --y) {
        for (int x = 0; x < net.width(); ++x) {
            if (x) out << ' ';
            switch (net.at({x, y})) {
                case LocalFunction::And: out << '&'; break;
                case LocalFunction::StrictMajority: out << 'M'; break;
                case LocalFunction::NonStrictMajority: out << 'm'; break;
                case LocalFunction::Or: out << '|'; break;
                case LocalFunction::One: out << '1'; break;
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace fspp
