#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fspp/grid.hpp"
#include "fspp/macrocell.hpp"
#include "fspp/majority.hpp"

namespace fspp {

// Per-cell YES/NO answers computed in one pass over a configuration.
struct AnswerGrid {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> yes;
    bool at(Coord c) const { return yes[static_cast<size_t>(c.y) * width + c.x] != 0; }
    void set(Coord c, bool v) { yes[static_cast<size_t>(c.y) * width + c.x] = v ? 1 : 0; }
};

// {0,4}: a 4 always fires; a 0 fires iff it has four in-rectangle neighbors
// and all of them hold 4. Purely local.
AnswerGrid decide_04_all(const Configuration& config);
bool decide_04(const Query& query);

// {1,4}: bordered grid graph under freezing strict majority. The ring of
// 0-vertices pads every border cell to degree 4, so the degree-relative
// threshold floor(deg/2)+1 coincides with the sandpile's "needs 3 grains".
MajorityGraph reduce_14_to_smaj(const Configuration& config);

struct MajorityRunStats {
    int max_degree = 0;
    int steps = 0;
    bool gadget_vertex_fired = false;  // any Port vertex reached state 1
};

// {0,1,4}: same graph with a 4-cycle of port vertices in place of every
// 0-cell. Ports never flip, so 0-cells insulate exactly as in the sandpile.
MajorityGraph build_014_graph(const Configuration& config);
AnswerGrid decide_014_all(const Configuration& config, MajorityRunStats* stats = nullptr);
bool decide_014(const Query& query, MajorityRunStats* stats = nullptr);

// {0,3,4}: breadth-first search from the 4-cells through {3,4}-cells; a
// questioned 0 is a conjunction over its in-rectangle neighbors (false at
// borders and next to another 0).
AnswerGrid decide_034_all(const Configuration& config);
bool decide_034(const Query& query);

// {2,4}: run the threshold network to its fixpoint.
AnswerGrid decide_24_all(const Configuration& config);
bool decide_24(const Query& query);

// {2,3,4}: reduce away the 3s, then decide on {2,4}.
bool decide_234(const Query& query, const MacrocellLibrary& lib);

// Alphabet classification registry (complexity of A-FSPP per allowed set,
// restricted to sets containing 4 with at least one of 0..3).
enum class Hardness : uint8_t { AC0, NL, NC2, FsppHard, Open };
const char* to_string(Hardness h);

struct AlphabetRow {
    AllowedSet set;
    Hardness hardness;
    const char* decider;  // registry name, nullptr when none is routed
};
std::span<const AlphabetRow> alphabet_table();

// Name of the specialized decider `auto` dispatch would use for this
// configuration's value set, if any.
std::optional<std::string> special_decider_for(const Configuration& config);

// Dispatch to the routed specialized decider; throws Error when there is
// none for the configuration's value set.
bool decide_special(const Query& query, const MacrocellLibrary& lib,
                    MajorityRunStats* stats = nullptr);

}  // namespace fspp
