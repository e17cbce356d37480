#pragma once

#include <array>
#include <cstdint>

#include "fspp/grid.hpp"

namespace fspp {

// Seeded random A-simple instances. Cell values are drawn independently with
// probability weight[v] / sum(weights); weights may be nonzero only on
// allowed values.
struct GenSpec {
    int width = 1;
    int height = 1;
    AllowedSet alphabet;
    std::array<int, 5> weights{};  // all zero = uniform over the alphabet
    uint64_t seed = 0;

    void validate() const;  // throws Error on inconsistencies
};

Configuration generate(const GenSpec& spec);

}  // namespace fspp
