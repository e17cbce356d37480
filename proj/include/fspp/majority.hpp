#pragma once

#include <string>
#include <vector>

#include "fspp/grid.hpp"

namespace fspp {

// Vertex labels keep graphs inspectable: which grid cell (or which gadget
// part of which cell) a vertex stands for.
struct VertexTag {
    enum class Kind : uint8_t { Cell, Ring, Port, Inner };
    Kind kind = Kind::Cell;
    Coord cell;    // grid cell; Ring uses bordered-frame coordinates
    int sub = -1;  // Port: direction 0..3 (n,e,s,w); Inner: index 0..3

    bool operator==(const VertexTag&) const = default;
    std::string to_string() const;
};

// Undirected graph under the freezing strict-majority dynamics: a 0-vertex
// flips to 1 iff at least floor(deg/2)+1 of its neighbors are 1; 1-vertices
// stay 1. Updates are synchronous.
class MajorityGraph {
  public:
    int add_vertex(VertexTag tag, bool state);
    void add_edge(int a, int b);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    size_t edge_count() const { return edge_count_; }
    bool state(int v) const { return state_[v] != 0; }
    void set_state(int v, bool s) { state_[v] = s ? 1 : 0; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    const std::vector<int>& adjacency(int v) const { return adjacency_[v]; }
    const VertexTag& tag(int v) const { return tags_[v]; }
    int max_degree() const;

    bool operator==(const MajorityGraph&) const = default;

    // One line per vertex: "id tag state: neighbor ids".
    std::string dump() const;

  private:
    std::vector<std::vector<int>> adjacency_;
    std::vector<uint8_t> state_;
    std::vector<VertexTag> tags_;
    size_t edge_count_ = 0;
};

// One synchronous step.
MajorityGraph smaj_step(const MajorityGraph& graph);

// Run to the fixpoint in place; returns the number of steps taken. Throws
// InternalBoundViolation past vertex_count() steps.
int smaj_run_to_fixpoint(MajorityGraph& graph);

}  // namespace fspp
