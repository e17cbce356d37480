#include "fspp/majority.hpp"

#include <algorithm>
#include <sstream>

namespace fspp {

std::string VertexTag::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Cell: out << "cell(" << cell.x << "," << cell.y << ")"; break;
        case Kind::Ring: out << "ring(" << cell.x << "," << cell.y << ")"; break;
        case Kind::Port:
            out << "port(" << cell.x << "," << cell.y << ")." << kDirectionNames[sub];
            break;
        case Kind::Inner: out << "inner(" << cell.x << "," << cell.y << ")." << sub; break;
    }
    return out.str();
}

int MajorityGraph::add_vertex(VertexTag tag, bool state) {
    adjacency_.emplace_back();
    state_.push_back(state ? 1 : 0);
    tags_.push_back(tag);
    return vertex_count() - 1;
}

void MajorityGraph::add_edge(int a, int b) {
    if (a == b) throw Error("self-loops not allowed");
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    ++edge_count_;
}

int MajorityGraph::max_degree() const {
    int best = 0;
    for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
    return best;
}

std::string MajorityGraph::dump() const {
    std::ostringstream out;
    for (int v = 0; v < vertex_count(); ++v) {
        out << v << " " << tags_[v].to_string() << " " << (state(v) ? 1 : 0) << ":";
        std::vector<int> adj = adjacency_[v];
        std::sort(adj.begin(), adj.end());
        for (int n : adj) out << " " << n;
        out << "\n";
    }
    return out.str();
}

MajorityGraph smaj_step(const MajorityGraph& graph) {
    MajorityGraph out = graph;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (graph.state(v)) continue;
        int ones = 0;
        for (int n : graph.adjacency(v))
            if (graph.state(n)) ++ones;
        if (ones >= graph.degree(v) / 2 + 1) out.set_state(v, true);
    }
    return out;
}

int smaj_run_to_fixpoint(MajorityGraph& graph) {
    for (int steps = 0;; ++steps) {
        if (steps > graph.vertex_count())
            throw InternalBoundViolation("majority dynamics exceeded the vertex-count bound");
        MajorityGraph next = smaj_step(graph);
        if (next == graph) return steps;
        graph = std::move(next);
    }
}

}  // namespace fspp
