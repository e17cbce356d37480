#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fspp/grid.hpp"
#include "fspp/macrocell.hpp"

namespace fspp {

// Instance-to-instance transforms that replace every cell of an A-simple
// instance with a macrocell over a smaller alphabet B, preserving the FSPP
// answer for the questioned cell.
enum class ReductionId : uint8_t {
    R234_24,    // {2,3,4} -> {2,4},     stride 6x5
    R_1234,     // {0..4}  -> {1,2,3,4}, stride 5x5
    R_0234,     // {0..4}  -> {0,2,3,4}, stride 5x5
    R_0124,     // {0..4}  -> {0,1,2,4}, stride 7x7
    R0124_124,  // {0,1,2,4} -> {1,2,4}, stride 5x7
    R0234_024,  // {0,2,3,4} -> {0,2,4}, stride 7x7 (shares R_0124's blocks)
    R0134_134,  // {0,1,3,4} -> {1,3,4}, stride 3x3 (7x7 when questioned cell is 0)
};

std::string to_string(ReductionId id);
std::optional<ReductionId> reduction_from_string(const std::string& name);
std::vector<ReductionId> all_reductions();

struct ReductionInfo {
    ReductionId id;
    AllowedSet source;
    AllowedSet target;
    std::string pattern_group;  // reduction id under which the blocks are filed
};
const ReductionInfo& reduction_info(ReductionId id);

enum class Role : uint8_t { Center, Wire, Background };

struct ProvenanceEntry {
    Coord source;         // cell of the original instance
    std::string case_id;  // macrocell case (outermost layer)
    Role role;
};

// One reduction application: which block, with which representative, was
// placed for every source cell.
struct ProvenanceLayer {
    ReductionId id;
    int stride_x = 1;
    int stride_y = 1;
    int source_width = 0;
    int source_height = 0;
    std::vector<std::string> case_ids;  // per source cell, row-major
    std::vector<Coord> rep_offsets;     // per source cell
    std::vector<uint8_t> roles;         // per target cell, row-major

    const std::string& case_at(Coord source) const;
    Coord rep_offset_at(Coord source) const;
    Coord block_origin(Coord source) const { return {source.x * stride_x, source.y * stride_y}; }
    Coord source_of(Coord target) const { return {target.x / stride_x, target.y / stride_y}; }
    Role role_at(Coord target) const;
};

class Provenance {
  public:
    void push_layer(ProvenanceLayer layer) { layers_.push_back(std::move(layer)); }
    bool empty() const { return layers_.empty(); }
    const std::vector<ProvenanceLayer>& layers() const { return layers_; }

    // Final-instance position of the representative cell of a source cell,
    // walking forward through every layer.
    Coord representative(Coord source) const;
    // Map a final-instance cell back to the original source cell; case and
    // role come from the outermost layer.
    ProvenanceEntry lookup(Coord target) const;

  private:
    std::vector<ProvenanceLayer> layers_;
};

struct ReducedInstance {
    Configuration config;
    Coord cell;  // questioned cell in the reduced instance
    Provenance provenance;
};

// Throws WrongAlphabet when the instance is not source-simple for the
// reduction, OutOfBounds for a bad questioned cell.
ReducedInstance apply_reduction(ReductionId id, const Query& query, const MacrocellLibrary& lib);

// Named per-reduction wrappers.
ReducedInstance reduce_234_to_24(const Query& query, const MacrocellLibrary& lib);
ReducedInstance reduce_to_1234(const Query& query, const MacrocellLibrary& lib);
ReducedInstance reduce_to_0234(const Query& query, const MacrocellLibrary& lib);
ReducedInstance reduce_to_0124(const Query& query, const MacrocellLibrary& lib);
ReducedInstance reduce_0124_to_124(const Query& query, const MacrocellLibrary& lib);
ReducedInstance reduce_0234_to_024(const Query& query, const MacrocellLibrary& lib);
ReducedInstance reduce_0134_to_134(const Query& query, const MacrocellLibrary& lib);

// Apply the ids left to right; alphabets must line up (ChainMismatch).
// An empty chain returns the instance unchanged with empty provenance.
ReducedInstance compose(std::span<const ReductionId> chain, const Query& query,
                        const MacrocellLibrary& lib);

}  // namespace fspp
