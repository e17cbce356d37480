#include "fspp/sim.hpp"

#include <string>

#include "fspp/rng.hpp"

namespace fspp {

namespace {

constexpr int16_t kFrozenRaw = -1;

// Level-synchronous frontier run of the freezing dynamics, equivalent to
// iterating step(): level t holds exactly the cells with >= 4 grains at
// parallel time t. Linear in firings instead of steps * cells. Stops early
// once `watch` fires (if given), recording the time in `watch_time`.
struct FrontierRun {
    int steps = 0;
    bool watch_fired = false;
    int watch_time = -1;
};

FrontierRun run_frontier(Configuration& config, Trace* trace, const Coord* watch) {
    const int w = config.width();
    const int h = config.height();
    auto& cells = config.raw_cells();
    const size_t watch_index = watch ? config.index(*watch) : 0;

    FrontierRun result;
    std::vector<size_t> level;
    for (size_t i = 0; i < cells.size(); ++i)
        if (cells[i] >= 4) level.push_back(i);

    std::vector<size_t> next;
    for (int t = 0; !level.empty(); ++t) {
        if (t > w * h)
            throw InternalBoundViolation("stabilization exceeded the width*height step bound");
        result.steps = t + 1;
        for (size_t i : level) {
            if (trace) trace->record_index(i, t);
            if (watch && i == watch_index) {
                result.watch_fired = true;
                result.watch_time = t;
                return result;
            }
        }
        // All of this level fires at once; grains sent between co-firing
        // cells land on Frozen cells and vanish.
        for (size_t i : level) cells[i] = kFrozenRaw;
        next.clear();
        for (size_t i : level) {
            const int x = static_cast<int>(i % w);
            const int y = static_cast<int>(i / w);
            for (const Coord& d : kNeighborOffsets) {
                const int nx = x + d.x;
                const int ny = y + d.y;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                const size_t ni = static_cast<size_t>(ny) * w + nx;
                if (cells[ni] == kFrozenRaw) continue;
                if (++cells[ni] == 4) next.push_back(ni);
            }
        }
        level.swap(next);
    }
    return result;
}

}  // namespace

Configuration step(const Configuration& config) {
    const int w = config.width();
    const int h = config.height();
    Configuration out = config;
    const auto& old_cells = config.raw_cells();
    auto& new_cells = out.raw_cells();
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const size_t i = static_cast<size_t>(y) * w + x;
            if (old_cells[i] >= 4) {
                new_cells[i] = kFrozenRaw;
                continue;
            }
            if (old_cells[i] == kFrozenRaw) continue;
            int16_t v = old_cells[i];
            for (const Coord& d : kNeighborOffsets) {
                const int nx = x + d.x;
                const int ny = y + d.y;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                if (old_cells[static_cast<size_t>(ny) * w + nx] >= 4) ++v;
            }
            new_cells[i] = v;
        }
    }
    return out;
}

StabilizeResult stabilize(const Configuration& config) {
    StabilizeResult result{config, Trace(config.width(), config.height())};
    FrontierRun run = run_frontier(result.config, &result.trace, nullptr);
    result.trace.steps = run.steps;
    return result;
}

FsppAnswer decide_fspp(const Query& query) {
    query.validate();
    Configuration work = query.config;
    FrontierRun run = run_frontier(work, nullptr, &query.cell);
    if (run.watch_fired) return {true, run.watch_time};
    return {false, std::nullopt};
}

Configuration fire_sequential(const Configuration& config, const Schedule& schedule) {
    Configuration out = config;
    for (const Coord& c : schedule) {
        CellValue v = out.at(c);  // index() throws OutOfBounds
        if (v.is_frozen() || v.grains() < 4)
            throw InvalidSchedule("schedule fires cell (" + std::to_string(c.x) + "," +
                                  std::to_string(c.y) + ") which does not hold >= 4 grains");
        out.set(c, CellValue::frozen());
        for (const Coord& n : neighbors(out, c)) {
            CellValue nv = out.at(n);
            if (!nv.is_frozen()) out.set(n, CellValue::grains(nv.grains() + 1));
        }
    }
    return out;
}

Schedule random_maximal_schedule(const Configuration& config, uint64_t seed) {
    Rng rng(seed);
    Configuration work = config;
    Schedule schedule;
    while (true) {
        std::vector<Coord> eligible;
        for (int y = 0; y < work.height(); ++y)
            for (int x = 0; x < work.width(); ++x) {
                CellValue v = work.at({x, y});
                if (!v.is_frozen() && v.grains() >= 4) eligible.push_back({x, y});
            }
        if (eligible.empty()) break;
        Coord c = eligible[rng.below(eligible.size())];
        schedule.push_back(c);
        work.set(c, CellValue::frozen());
        for (const Coord& n : neighbors(work, c)) {
            CellValue nv = work.at(n);
            if (!nv.is_frozen()) work.set(n, CellValue::grains(nv.grains() + 1));
        }
    }
    return schedule;
}

Configuration clamp(const Configuration& config) {
    Configuration out = config;
    for (int16_t& raw : out.raw_cells())
        if (raw > 4) raw = 4;
    return out;
}

}  // namespace fspp
