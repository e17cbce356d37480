#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fspp/grid.hpp"

namespace fspp {

// Local functions of the threshold network a simple configuration maps to.
// Thresholds count state-1 in-rectangle neighbors and are hard-coded, not
// relative to the cell's degree:
//   And:               becomes 1 iff the count equals 4
//   StrictMajority:    count > 2
//   NonStrictMajority: count >= 2
//   Or:                count >= 1
//   One:               constant 1 (from the first step on)
// Every function freezes: a cell in state 1 stays 1.
enum class LocalFunction : uint8_t { And, StrictMajority, NonStrictMajority, Or, One };

const char* local_function_name(LocalFunction f);

class BooleanNetwork {
  public:
    BooleanNetwork() = default;
    BooleanNetwork(int width, int height)
        : width_(width), height_(height), fns_(static_cast<size_t>(width) * height, LocalFunction::And) {}
    int width() const { return width_; }
    int height() const { return height_; }
    LocalFunction at(Coord c) const { return fns_[idx(c)]; }
    void set(Coord c, LocalFunction f) { fns_[idx(c)] = f; }

  private:
    size_t idx(Coord c) const { return static_cast<size_t>(c.y) * width_ + c.x; }
    int width_ = 0;
    int height_ = 0;
    std::vector<LocalFunction> fns_;
};

class BoolConfig {
  public:
    BoolConfig() = default;
    BoolConfig(int width, int height)
        : width_(width), height_(height), state_(static_cast<size_t>(width) * height, 0) {}
    int width() const { return width_; }
    int height() const { return height_; }
    bool at(Coord c) const { return state_[idx(c)] != 0; }
    void set(Coord c, bool v) { state_[idx(c)] = v ? 1 : 0; }
    bool operator==(const BoolConfig&) const = default;

  private:
    size_t idx(Coord c) const { return static_cast<size_t>(c.y) * width_ + c.x; }
    int width_ = 0;
    int height_ = 0;
    std::vector<uint8_t> state_;
};

// 1 where the cell is Frozen, 0 elsewhere.
BoolConfig phi(const Configuration& config);

// Value -> local function: 0=And, 1=StrictMajority, 2=NonStrictMajority,
// 3=Or, 4=One. Throws NotSimple on Frozen cells or values above 4.
BooleanNetwork build_network(const Configuration& config);

// One synchronous update of the whole network.
BoolConfig bn_step(const BooleanNetwork& net, const BoolConfig& state);

// Check that the network run from the all-zero state shadows the sandpile:
// for every t <= horizon, B^t(phi(c)) == phi(F^t(c)). Horizon defaults to
// width*height (enough to reach both fixpoints).
bool check_commutation(const Configuration& config, std::optional<int> horizon = std::nullopt);

// Text dump, top row first: & (And), M (StrictMajority), m (NonStrict-
// Majority), | (Or), 1 (One). For docs and tests.
std::string format_network(const BooleanNetwork& net);

}  // namespace fspp
