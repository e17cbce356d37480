#pragma once

#include <optional>
#include <vector>

#include "fspp/grid.hpp"

namespace fspp {

// Firing history of a stabilization run. Cells that never fire have no time.
class Trace {
  public:
    Trace() = default;
    Trace(int width, int height)
        : width_(width), height_(height), times_(static_cast<size_t>(width) * height, kNever) {}

    int width() const { return width_; }
    int height() const { return height_; }

    std::optional<int> firing_time(Coord c) const {
        int t = times_[idx(c)];
        if (t == kNever) return std::nullopt;
        return t;
    }
    bool fired(Coord c) const { return times_[idx(c)] != kNever; }
    void record(Coord c, int t) { times_[idx(c)] = t; }
    void record_index(size_t i, int t) { times_[i] = t; }

    int steps = 0;  // parallel steps until the fixpoint

  private:
    static constexpr int kNever = -1;
    size_t idx(Coord c) const { return static_cast<size_t>(c.y) * width_ + c.x; }
    int width_ = 0;
    int height_ = 0;
    std::vector<int> times_;
};

// One synchronous step of the freezing dynamics: every cell holding >= 4
// grains becomes Frozen; every non-Frozen in-rectangle neighbor of a firing
// cell gains one grain. Reads the old grid, writes a new one.
Configuration step(const Configuration& config);

struct StabilizeResult {
    Configuration config;
    Trace trace;
};

// Iterate step() until nothing fires. Throws InternalBoundViolation if the
// run exceeds width*height parallel steps (it provably cannot).
StabilizeResult stabilize(const Configuration& config);

struct FsppAnswer {
    bool fires = false;
    std::optional<int> first_time;  // first t with >= 4 grains at the cell
};

// Does the questioned cell ever accumulate >= 4 grains? Implemented as a
// frontier simulation equivalent to the synchronous sweep (property-tested
// against it) so huge reduced instances stay cheap; exits early on YES.
FsppAnswer decide_fspp(const Query& query);

using Schedule = std::vector<Coord>;

// Fire the listed cells one at a time, validating that each holds >= 4
// grains at its turn (InvalidSchedule otherwise). Used to witness that the
// final frozen set does not depend on firing order.
Configuration fire_sequential(const Configuration& config, const Schedule& schedule);

// A random maximal sequential schedule: keep firing a uniformly random
// eligible cell until none holds >= 4 grains.
Schedule random_maximal_schedule(const Configuration& config, uint64_t seed);

// Cap grain counts at 4 (min{c_v, 4}); Frozen stays Frozen. Preserves every
// firing decision, hence every FSPP answer.
Configuration clamp(const Configuration& config);

}  // namespace fspp
