#include "fspp/deciders.hpp"

#include <array>
#include <deque>

#include "fspp/boolnet.hpp"
#include "fspp/reductions.hpp"

namespace fspp {

namespace {

void require_alphabet(const Configuration& config, AllowedSet allowed, const char* who) {
    if (!is_a_simple(config, allowed))
        throw WrongAlphabet(std::string(who) + " wants a " + allowed.to_string() +
                            "-simple instance");
}

// A 0-cell fires only if all four of its neighbors fired first. Two adjacent
// 0-cells therefore block each other forever, and a border 0-cell can never
// collect four grains. Applies to every alphabet.
bool zero_cell_conjunction(const Configuration& config, Coord c, const AnswerGrid& answers) {
    int in_rect = 0;
    for (const Coord& n : neighbors(config, c)) {
        ++in_rect;
        if (config.at(n).grains() == 0) return false;
        if (!answers.at(n)) return false;
    }
    return in_rect == 4;
}

AnswerGrid empty_answers(const Configuration& config) {
    AnswerGrid out;
    out.width = config.width();
    out.height = config.height();
    out.yes.assign(config.size(), 0);
    return out;
}

// Shared builder for the bordered strict-majority graphs: an (n+2)x(m+2)
// frame whose border ring holds state-0 vertices, cell vertices inside, and
// (when zeros are allowed) a 4-cycle of port vertices per 0-cell. The ring
// pads every border cell to degree 4.
MajorityGraph build_bordered_graph(const Configuration& config, bool allow_zeros,
                                   std::vector<int>* cell_vertex) {
    const int w = config.width();
    const int h = config.height();
    MajorityGraph graph;

    // Attachment vertex of each bordered-frame position per direction;
    // uniform for everything except gadget ports.
    const int bw = w + 2;
    const int bh = h + 2;
    std::vector<std::array<int, 4>> attach(static_cast<size_t>(bw) * bh, {-1, -1, -1, -1});
    auto bindex = [bw](int bx, int by) { return static_cast<size_t>(by) * bw + bx; };

    for (int by = 0; by < bh; ++by)
        for (int bx = 0; bx < bw; ++bx) {
            const bool ring = bx == 0 || by == 0 || bx == bw - 1 || by == bh - 1;
            if (ring) {
                int v = graph.add_vertex({VertexTag::Kind::Ring, {bx, by}, -1}, false);
                attach[bindex(bx, by)] = {v, v, v, v};
                continue;
            }
            const Coord cell{bx - 1, by - 1};
            const int value = config.at(cell).grains();
            if (value == 0) {
                if (!allow_zeros) throw WrongAlphabet("unexpected 0 cell");
                std::array<int, 4> ports;
                for (int d = 0; d < 4; ++d)
                    ports[d] = graph.add_vertex({VertexTag::Kind::Port, cell, d}, false);
                for (int d = 0; d < 4; ++d) graph.add_edge(ports[d], ports[(d + 1) % 4]);
                attach[bindex(bx, by)] = ports;
                if (cell_vertex) (*cell_vertex)[config.index(cell)] = -1;
            } else {
                int v = graph.add_vertex({VertexTag::Kind::Cell, cell, -1}, value == 4);
                attach[bindex(bx, by)] = {v, v, v, v};
                if (cell_vertex) (*cell_vertex)[config.index(cell)] = v;
            }
        }

    // North and east edges of every frame position; opposite(d) = (d+2)%4.
    for (int by = 0; by < bh; ++by)
        for (int bx = 0; bx < bw; ++bx)
            for (int d : {0, 1}) {
                const int nx = bx + kNeighborOffsets[d].x;
                const int ny = by + kNeighborOffsets[d].y;
                if (nx < 0 || nx >= bw || ny < 0 || ny >= bh) continue;
                graph.add_edge(attach[bindex(bx, by)][d], attach[bindex(nx, ny)][(d + 2) % 4]);
            }
    return graph;
}

}  // namespace

AnswerGrid decide_04_all(const Configuration& config) {
    require_alphabet(config, AllowedSet::of({0, 4}), "decide_04");
    AnswerGrid out = empty_answers(config);
    AnswerGrid fours = empty_answers(config);
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x)
            fours.set({x, y}, config.at({x, y}).grains() == 4);
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x) {
            const Coord c{x, y};
            out.set(c, config.at(c).grains() == 4 || zero_cell_conjunction(config, c, fours));
        }
    return out;
}

bool decide_04(const Query& query) {
    query.validate();
    return decide_04_all(query.config).at(query.cell);
}

MajorityGraph reduce_14_to_smaj(const Configuration& config) {
    require_alphabet(config, AllowedSet::of({1, 4}), "reduce_14_to_smaj");
    return build_bordered_graph(config, false, nullptr);
}

MajorityGraph build_014_graph(const Configuration& config) {
    require_alphabet(config, AllowedSet::of({0, 1, 4}), "decide_014");
    return build_bordered_graph(config, true, nullptr);
}

AnswerGrid decide_014_all(const Configuration& config, MajorityRunStats* stats) {
    require_alphabet(config, AllowedSet::of({0, 1, 4}), "decide_014");
    std::vector<int> cell_vertex(config.size(), -1);
    MajorityGraph graph = build_bordered_graph(config, true, &cell_vertex);
    const int steps = smaj_run_to_fixpoint(graph);
    if (stats) {
        stats->max_degree = graph.max_degree();
        stats->steps = steps;
        stats->gadget_vertex_fired = false;
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (graph.tag(v).kind == VertexTag::Kind::Port && graph.state(v))
                stats->gadget_vertex_fired = true;
    }

    AnswerGrid out = empty_answers(config);
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x) {
            const Coord c{x, y};
            if (config.at(c).grains() != 0) out.set(c, graph.state(cell_vertex[config.index(c)]));
        }
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x) {
            const Coord c{x, y};
            if (config.at(c).grains() == 0) out.set(c, zero_cell_conjunction(config, c, out));
        }
    return out;
}

bool decide_014(const Query& query, MajorityRunStats* stats) {
    query.validate();
    return decide_014_all(query.config, stats).at(query.cell);
}

AnswerGrid decide_034_all(const Configuration& config) {
    require_alphabet(config, AllowedSet::of({0, 3, 4}), "decide_034");
    AnswerGrid out = empty_answers(config);
    std::deque<Coord> queue;
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x)
            if (config.at({x, y}).grains() == 4) {
                out.set({x, y}, true);
                queue.push_back({x, y});
            }
    while (!queue.empty()) {
        Coord c = queue.front();
        queue.pop_front();
        for (const Coord& n : neighbors(config, c)) {
            if (out.at(n) || config.at(n).grains() == 0) continue;
            out.set(n, true);  // a 3 fires from a single incoming grain
            queue.push_back(n);
        }
    }
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x) {
            const Coord c{x, y};
            if (config.at(c).grains() == 0) out.set(c, zero_cell_conjunction(config, c, out));
        }
    return out;
}

bool decide_034(const Query& query) {
    query.validate();
    return decide_034_all(query.config).at(query.cell);
}

AnswerGrid decide_24_all(const Configuration& config) {
    require_alphabet(config, AllowedSet::of({2, 4}), "decide_24");
    BooleanNetwork net = build_network(config);
    BoolConfig state(config.width(), config.height());
    const int limit = config.width() * config.height() + 1;
    for (int t = 0;; ++t) {
        if (t > limit)
            throw InternalBoundViolation("network run exceeded the cell-count bound");
        BoolConfig next = bn_step(net, state);
        if (next == state) break;
        state = std::move(next);
    }
    AnswerGrid out = empty_answers(config);
    for (int y = 0; y < config.height(); ++y)
        for (int x = 0; x < config.width(); ++x) out.set({x, y}, state.at({x, y}));
    return out;
}

bool decide_24(const Query& query) {
    query.validate();
    return decide_24_all(query.config).at(query.cell);
}

bool decide_234(const Query& query, const MacrocellLibrary& lib) {
    require_alphabet(query.config, AllowedSet::of({2, 3, 4}), "decide_234");
    ReducedInstance reduced = reduce_234_to_24(query, lib);
    return decide_24({reduced.config, reduced.cell});
}

const char* to_string(Hardness h) {
    switch (h) {
        case Hardness::AC0: return "AC0";
        case Hardness::NL: return "NL";
        case Hardness::NC2: return "NC2";
        case Hardness::FsppHard: return "FSPP-hard";
        case Hardness::Open: return "open";
    }
    return "?";
}

std::span<const AlphabetRow> alphabet_table() {
    static const std::array<AlphabetRow, 13> table = {{
        {AllowedSet::of({0, 4}), Hardness::AC0, "decide_04"},
        {AllowedSet::of({0, 3, 4}), Hardness::NL, "decide_034"},
        {AllowedSet::of({1, 4}), Hardness::NC2, "decide_014"},
        {AllowedSet::of({0, 1, 4}), Hardness::NC2, "decide_014"},
        {AllowedSet::of({2, 4}), Hardness::NC2, "decide_24"},
        {AllowedSet::of({2, 3, 4}), Hardness::NC2, "decide_234"},
        {AllowedSet::of({1, 2, 3, 4}), Hardness::FsppHard, nullptr},
        {AllowedSet::of({0, 2, 3, 4}), Hardness::FsppHard, nullptr},
        {AllowedSet::of({0, 1, 2, 4}), Hardness::FsppHard, nullptr},
        {AllowedSet::of({1, 2, 4}), Hardness::FsppHard, nullptr},
        {AllowedSet::of({0, 2, 4}), Hardness::FsppHard, nullptr},
        {AllowedSet::of({0, 1, 3, 4}), Hardness::Open, nullptr},
        {AllowedSet::of({1, 3, 4}), Hardness::Open, nullptr},
    }};
    return table;
}

std::optional<std::string> special_decider_for(const Configuration& config) {
    AllowedSet values = value_set(config);
    for (const AlphabetRow& row : alphabet_table())
        if (row.decider && values.subset_of(row.set)) return std::string(row.decider);
    return std::nullopt;
}

bool decide_special(const Query& query, const MacrocellLibrary& lib, MajorityRunStats* stats) {
    std::optional<std::string> name = special_decider_for(query.config);
    if (!name)
        throw Error("no specialized decider for alphabet " +
                    value_set(query.config).to_string());
    if (*name == "decide_04") return decide_04(query);
    if (*name == "decide_034") return decide_034(query);
    if (*name == "decide_014") return decide_014(query, stats);
    if (*name == "decide_24") return decide_24(query);
    if (*name == "decide_234") return decide_234(query, lib);
    throw Error("unroutable decider " + *name);
}

}  // namespace fspp
