#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fspp/errors.hpp"

namespace fspp {

struct Coord {
    int x = 0;
    int y = 0;
    bool operator==(const Coord&) const = default;
};

// Direction order is fixed everywhere: north, east, south, west.
inline constexpr std::array<Coord, 4> kNeighborOffsets{{{0, 1}, {1, 0}, {0, -1}, {-1, 0}}};
inline constexpr std::array<const char*, 4> kDirectionNames{"n", "e", "s", "w"};

// A cell is either Frozen (fired in the past, absorbs grains) or holds a
// grain count. Grain counts above 4 only occur in generalized configurations
// fed to clamp(); parsing never produces them.
class CellValue {
  public:
    CellValue() : raw_(0) {}
    static CellValue frozen() { return CellValue(kFrozen); }
    static CellValue grains(int n) {
        if (n < 0) throw Error("grain count must be non-negative");
        return CellValue(static_cast<int16_t>(n));
    }
    bool is_frozen() const { return raw_ == kFrozen; }
    int grains() const {
        if (is_frozen()) throw Error("Frozen cell has no grain count");
        return raw_;
    }
    bool operator==(const CellValue&) const = default;

    // Raw view for the dynamics kernels: Frozen as -1, grains as themselves.
    int16_t raw() const { return raw_; }
    static CellValue from_raw(int16_t raw) { return CellValue(raw); }

  private:
    static constexpr int16_t kFrozen = -1;
    explicit CellValue(int16_t raw) : raw_(raw) {}
    int16_t raw_;
};

// Rectangular grid, origin at the bottom-left corner: x grows east, y grows
// north. Text serialization lists the top row first (see textio.hpp).
class Configuration {
  public:
    Configuration() = default;
    Configuration(int width, int height, CellValue fill = CellValue::grains(0))
        : width_(width), height_(height), cells_(static_cast<size_t>(width) * height, fill.raw()) {
        if (width < 1 || height < 1) throw Error("configuration dimensions must be positive");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    size_t size() const { return cells_.size(); }

    bool in_bounds(Coord c) const { return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_; }

    CellValue at(Coord c) const { return CellValue::from_raw(cells_[index(c)]); }
    void set(Coord c, CellValue v) { cells_[index(c)] = v.raw(); }

    // Flat row-major access (y * width + x) for kernels and traces.
    size_t index(Coord c) const {
        if (!in_bounds(c))
            throw OutOfBounds("cell (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                              ") outside " + std::to_string(width_) + "x" + std::to_string(height_) + " grid");
        return static_cast<size_t>(c.y) * width_ + c.x;
    }
    const std::vector<int16_t>& raw_cells() const { return cells_; }
    std::vector<int16_t>& raw_cells() { return cells_; }

    bool operator==(const Configuration&) const = default;

  private:
    int width_ = 0;
    int height_ = 0;
    std::vector<int16_t> cells_;
};

// In-rectangle von Neumann neighbors of c, in north/east/south/west order.
std::vector<Coord> neighbors(const Configuration& config, Coord c);

// Subset of {0,1,2,3,4} as a bit mask.
class AllowedSet {
  public:
    AllowedSet() : mask_(0) {}
    static AllowedSet of(std::initializer_list<int> values) {
        AllowedSet s;
        for (int v : values) s.add(v);
        return s;
    }
    static AllowedSet full() { return of({0, 1, 2, 3, 4}); }

    void add(int v) {
        check(v);
        mask_ |= uint8_t(1u << v);
    }
    bool contains(int v) const { return v >= 0 && v <= 4 && (mask_ & (1u << v)); }
    bool subset_of(AllowedSet other) const { return (mask_ & ~other.mask_) == 0; }
    bool empty() const { return mask_ == 0; }
    bool operator==(const AllowedSet&) const = default;

    std::vector<int> values() const {
        std::vector<int> out;
        for (int v = 0; v <= 4; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }
    std::string to_string() const {
        std::string s = "{";
        for (int v : values()) {
            if (s.size() > 1) s += ",";
            s += std::to_string(v);
        }
        return s + "}";
    }

  private:
    static void check(int v) {
        if (v < 0 || v > 4) throw Error("allowed set values must lie in 0..4");
    }
    uint8_t mask_;
};

// All cells hold grain counts in 0..4 (no Frozen, nothing above 4).
bool is_simple(const Configuration& config);
// Simple and every value belongs to `allowed`.
bool is_a_simple(const Configuration& config, AllowedSet allowed);
// Smallest allowed set covering the configuration; throws NotSimple.
AllowedSet value_set(const Configuration& config);

struct Query {
    Configuration config;
    Coord cell;
    // Throws OutOfBounds if the questioned cell is outside the grid.
    void validate() const { (void)config.index(cell); }
};

}  // namespace fspp
