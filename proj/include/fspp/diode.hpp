#pragma once

#include <string>
#include <vector>

#include "fspp/grid.hpp"
#include "fspp/macrocell.hpp"
#include "fspp/majority.hpp"

namespace fspp {

enum class Side : uint8_t { North = 0, East = 1, South = 2, West = 3 };
const char* to_string(Side s);

class SideSet {
  public:
    SideSet() : mask_(0) {}
    static SideSet of(std::initializer_list<Side> sides) {
        SideSet s;
        for (Side d : sides) s.add(d);
        return s;
    }
    static SideSet from_mask(uint8_t mask) {
        SideSet s;
        s.mask_ = mask & 0xf;
        return s;
    }
    static SideSet all() { return from_mask(0xf); }

    void add(Side s) { mask_ |= uint8_t(1u << static_cast<int>(s)); }
    bool contains(Side s) const { return mask_ & (1u << static_cast<int>(s)); }
    int count() const;
    uint8_t mask() const { return mask_; }
    bool subset_of(SideSet other) const { return (mask_ & ~other.mask_) == 0; }
    bool operator==(const SideSet&) const = default;
    std::string to_string() const;  // e.g. "{N,E}", "{}"

  private:
    uint8_t mask_;
};

enum class Orientation : uint8_t { AsPrinted, Rotated90 };
const char* to_string(Orientation o);

// Rotate a grid a quarter turn counterclockwise (the east side becomes the
// north side).
Configuration rotate_ccw(const Configuration& config);

// The 21x21 {0,1,3,4} block that behaves almost as a value 2: two opposite
// input signals on its blocked axis produce no output, while any other
// combination of at least two inputs triggers every remaining side. As
// printed the blocked pair is west+east; rotated a quarter turn it is
// north+south.
class DiodeMacrocell {
  public:
    static DiodeMacrocell load(const MacrocellLibrary& lib);

    const Configuration& pattern(Orientation o) const;
    int size() const { return pattern_.width(); }
    // Mid-side wire stubs; identical for both orientations.
    Coord port(Side s) const;

  private:
    Configuration pattern_;  // as printed
    Configuration rotated_;
};

// Embed the block in a zero frame, seed a firing source next to each input
// side's stub, stabilize, and report which non-input stubs fired.
SideSet test_diode_macrocell(const DiodeMacrocell& diode, Orientation orientation, SideSet inputs);

struct TruthTableRow {
    Orientation orientation;
    SideSet inputs;
    SideSet outputs;
};

// All 15 nonempty input combinations for both orientations.
std::vector<TruthTableRow> diode_truth_table(const DiodeMacrocell& diode);
std::string truth_table_json(const std::vector<TruthTableRow>& rows);

// {1,3,4}: planar strict-majority graph of maximum degree 5. Value 1 maps to
// a 0-vertex, 4 to a 1-vertex and 3 to an eight-vertex gadget (four outer
// port vertices at 0, four inner vertices at 1) whose ports wire to the
// neighboring cells. No border ring.
MajorityGraph reduce_134_to_planar_smaj(const Configuration& config);

// Conjectural decider for simple instances with few 2s: replace every
// non-2 by a 21x21 block (crosses of 3s carrying the value; all-0 for 0) and
// every 2 by the diode block, try all 2^k orientation assignments, answer
// YES iff some assignment makes the embedded questioned cell fire. Throws
// TooManyTwos past `cap` 2-cells.
struct TruthTableDecision {
    bool fires = false;
    int assignments_tried = 0;
    int two_count = 0;
};
TruthTableDecision truth_table_decide_0134(const Query& query, const MacrocellLibrary& lib,
                                           int cap = 16);

}  // namespace fspp
