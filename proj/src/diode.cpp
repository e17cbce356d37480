#include "fspp/diode.hpp"

#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "fspp/sim.hpp"

namespace fspp {

namespace {

constexpr int kCross = 3;  // wire value: fires from a single incoming grain

void blit(Configuration& dst, const Configuration& src, Coord origin) {
    for (int y = 0; y < src.height(); ++y)
        for (int x = 0; x < src.width(); ++x)
            dst.set({origin.x + x, origin.y + y}, src.at({x, y}));
}

// A block carrying a non-2 value: wires of 3s from each mid-side stub to the
// center, which holds the value itself. Each arm that receives a signal
// delivers exactly one grain to the center, so the center fires exactly when
// the original cell would: 4 at once, 3 from one signal, 1 from three.
Configuration cross_block(int size, int value) {
    Configuration block(size, size);
    const int mid = size / 2;
    for (int x = 0; x < size; ++x) block.set({x, mid}, CellValue::grains(kCross));
    for (int y = 0; y < size; ++y) block.set({mid, y}, CellValue::grains(kCross));
    block.set({mid, mid}, CellValue::grains(value));
    return block;
}

std::vector<Side> side_list(SideSet set) {
    std::vector<Side> out;
    for (int d = 0; d < 4; ++d)
        if (set.contains(static_cast<Side>(d))) out.push_back(static_cast<Side>(d));
    return out;
}

}  // namespace

const char* to_string(Side s) {
    switch (s) {
        case Side::North: return "N";
        case Side::East: return "E";
        case Side::South: return "S";
        case Side::West: return "W";
    }
    return "?";
}

int SideSet::count() const { return std::popcount(mask_); }

std::string SideSet::to_string() const {
    std::string out = "{";
    for (Side s : side_list(*this)) {
        if (out.size() > 1) out += ",";
        out += fspp::to_string(s);
    }
    return out + "}";
}

const char* to_string(Orientation o) {
    return o == Orientation::AsPrinted ? "as-printed" : "rotated-90";
}

Configuration rotate_ccw(const Configuration& config) {
    Configuration out(config.height(), config.width());
    for (int y = 0; y < out.height(); ++y)
        for (int x = 0; x < out.width(); ++x)
            out.set({x, y}, config.at({y, config.height() - 1 - x}));
    return out;
}

DiodeMacrocell DiodeMacrocell::load(const MacrocellLibrary& lib) {
    const Macrocell& cell = lib.get("TT_0134", "diode");
    DiodeMacrocell diode;
    diode.pattern_ = cell.instantiate(0);
    if (diode.pattern_.width() != diode.pattern_.height())
        throw Error("diode block must be square");
    if (!is_a_simple(diode.pattern_, AllowedSet::of({0, 1, 3, 4})))
        throw WrongAlphabet("diode block must use values {0,1,3,4}");
    diode.rotated_ = rotate_ccw(diode.pattern_);
    return diode;
}

const Configuration& DiodeMacrocell::pattern(Orientation o) const {
    return o == Orientation::AsPrinted ? pattern_ : rotated_;
}

Coord DiodeMacrocell::port(Side s) const {
    const int mid = size() / 2;
    const int edge = size() - 1;
    switch (s) {
        case Side::North: return {mid, edge};
        case Side::East: return {edge, mid};
        case Side::South: return {mid, 0};
        case Side::West: return {0, mid};
    }
    throw Error("bad side");
}

SideSet test_diode_macrocell(const DiodeMacrocell& diode, Orientation orientation,
                             SideSet inputs) {
    Configuration rig(diode.size() + 2, diode.size() + 2);
    blit(rig, diode.pattern(orientation), {1, 1});
    for (Side s : side_list(inputs)) {
        const Coord stub{diode.port(s).x + 1, diode.port(s).y + 1};
        const Coord outside{stub.x + kNeighborOffsets[static_cast<int>(s)].x,
                            stub.y + kNeighborOffsets[static_cast<int>(s)].y};
        rig.set(outside, CellValue::grains(4));
    }
    const Trace trace = stabilize(rig).trace;
    SideSet outputs;
    for (int d = 0; d < 4; ++d) {
        const Side s = static_cast<Side>(d);
        if (inputs.contains(s)) continue;
        if (trace.fired({diode.port(s).x + 1, diode.port(s).y + 1})) outputs.add(s);
    }
    return outputs;
}

std::vector<TruthTableRow> diode_truth_table(const DiodeMacrocell& diode) {
    std::vector<TruthTableRow> rows;
    for (Orientation o : {Orientation::AsPrinted, Orientation::Rotated90})
        for (uint8_t mask = 1; mask < 16; ++mask) {
            const SideSet inputs = SideSet::from_mask(mask);
            rows.push_back({o, inputs, test_diode_macrocell(diode, o, inputs)});
        }
    return rows;
}

std::string truth_table_json(const std::vector<TruthTableRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const TruthTableRow& row : rows) {
        nlohmann::json inputs = nlohmann::json::array();
        for (Side s : side_list(row.inputs)) inputs.push_back(to_string(s));
        nlohmann::json outputs = nlohmann::json::array();
        for (Side s : side_list(row.outputs)) outputs.push_back(to_string(s));
        out.push_back({{"orientation", to_string(row.orientation)},
                       {"inputs", std::move(inputs)},
                       {"outputs", std::move(outputs)}});
    }
    return out.dump(2);
}

MajorityGraph reduce_134_to_planar_smaj(const Configuration& config) {
    if (!is_a_simple(config, AllowedSet::of({1, 3, 4})))
        throw WrongAlphabet("reduce_134_to_planar_smaj wants a {1,3,4}-simple instance");
    MajorityGraph graph;
    // Attachment vertex per cell and direction: the cell vertex itself, or
    // the matching outer port of a 3-gadget.
    std::vector<std::array<int, 4>> attach(config.size());
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x) {
            const Coord c{x, y};
            const int value = config.at(c).grains();
            if (value == 3) {
                std::array<int, 4> out;
                std::array<int, 4> inner;
                for (int d = 0; d < 4; ++d)
                    out[d] = graph.add_vertex({VertexTag::Kind::Port, c, d}, false);
                for (int d = 0; d < 4; ++d)
                    inner[d] = graph.add_vertex({VertexTag::Kind::Inner, c, d}, true);
                for (int d = 0; d < 4; ++d) {
                    graph.add_edge(out[d], out[(d + 1) % 4]);
                    graph.add_edge(inner[d], out[d]);
                    graph.add_edge(inner[d], out[(d + 3) % 4]);
                }
                attach[config.index(c)] = out;
            } else {
                const int v = graph.add_vertex({VertexTag::Kind::Cell, c, -1}, value == 4);
                attach[config.index(c)] = {v, v, v, v};
            }
        }
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x)
            for (int d : {0, 1}) {  // north and east edges once per pair
                const Coord c{x, y};
                const Coord n{x + kNeighborOffsets[d].x, y + kNeighborOffsets[d].y};
                if (!config.in_bounds(n)) continue;
                graph.add_edge(attach[config.index(c)][d], attach[config.index(n)][(d + 2) % 4]);
            }
    return graph;
}

namespace {

struct Embedding {
    Configuration base;               // all non-2 blocks placed, 2-blocks zero
    std::vector<Coord> two_origins;   // block origins of the 2-cells, scan order
    int block = 0;                    // block edge length
};

Embedding build_embedding(const Configuration& config, const DiodeMacrocell& diode) {
    Embedding e;
    e.block = diode.size();
    e.base = Configuration(config.width() * e.block, config.height() * e.block);
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x) {
            const Coord origin{x * e.block, y * e.block};
            const int value = config.at({x, y}).grains();
            if (value == 2)
                e.two_origins.push_back(origin);
            else if (value != 0)
                blit(e.base, cross_block(e.block, value), origin);
        }
    return e;
}

Coord block_center(const Embedding& e, Coord cell) {
    return {cell.x * e.block + e.block / 2, cell.y * e.block + e.block / 2};
}

Configuration instantiate_assignment(const Embedding& e, const DiodeMacrocell& diode,
                                     uint32_t assignment) {
    Configuration out = e.base;
    for (size_t i = 0; i < e.two_origins.size(); ++i) {
        const Orientation o =
            (assignment >> i) & 1u ? Orientation::Rotated90 : Orientation::AsPrinted;
        blit(out, diode.pattern(o), e.two_origins[i]);
    }
    return out;
}

// Did at least two of the block's mid-side stubs fire? For a diode block this
// says exactly "at least two side signals arrived": an arriving signal always
// fires its stub, and emitted outputs only exist once two inputs arrived.
bool two_stubs_fired(const Trace& trace, const DiodeMacrocell& diode, Coord origin) {
    int fired = 0;
    for (int d = 0; d < 4; ++d) {
        const Coord stub = diode.port(static_cast<Side>(d));
        if (trace.fired({origin.x + stub.x, origin.y + stub.y})) ++fired;
    }
    return fired >= 2;
}

}  // namespace

TruthTableDecision truth_table_decide_0134(const Query& query, const MacrocellLibrary& lib,
                                           int cap) {
    query.validate();
    if (!is_simple(query.config)) throw WrongAlphabet("truth table decider wants a simple instance");
    const DiodeMacrocell diode = DiodeMacrocell::load(lib);
    const Embedding e = build_embedding(query.config, diode);

    TruthTableDecision decision;
    decision.two_count = static_cast<int>(e.two_origins.size());
    if (decision.two_count > cap)
        throw TooManyTwos("instance has " + std::to_string(decision.two_count) +
                          " value-2 cells, cap is " + std::to_string(cap));

    const int qv = query.config.at(query.cell).grains();
    if (qv == 0) {
        // A 0-cell fires only once all four neighbors fired; adjacent 0-cells
        // block each other forever.
        if (neighbors(query.config, query.cell).size() != 4) return decision;
        for (const Coord& n : neighbors(query.config, query.cell))
            if (query.config.at(n).grains() == 0) return decision;
    }

    auto evaluate = [&](uint32_t assignment) -> bool {
        const Configuration instance = instantiate_assignment(e, diode, assignment);
        if (qv == 1 || qv == 3 || qv == 4)
            return decide_fspp({instance, block_center(e, query.cell)}).fires;
        const Trace trace = stabilize(instance).trace;
        if (qv == 2)
            return two_stubs_fired(trace, diode,
                                   {query.cell.x * e.block, query.cell.y * e.block});
        for (const Coord& n : neighbors(query.config, query.cell)) {
            const int nv = query.config.at(n).grains();
            const bool fired = nv == 2 ? two_stubs_fired(trace, diode,
                                                         {n.x * e.block, n.y * e.block})
                                       : trace.fired(block_center(e, n));
            if (!fired) return false;
        }
        return true;
    };

    const uint32_t total = 1u << decision.two_count;
    std::atomic<uint32_t> next{0};
    std::atomic<uint32_t> tried{0};
    std::atomic<bool> found{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            while (!found.load()) {
                const uint32_t a = next.fetch_add(1);
                if (a >= total) return;
                const bool fires = evaluate(a);
                tried.fetch_add(1);
                if (fires) found.store(true);
            }
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
            found.store(true);
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(hw, total);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    decision.assignments_tried = static_cast<int>(tried.load());
    decision.fires = found.load();
    return decision;
}

}  // namespace fspp
