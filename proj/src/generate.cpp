#include "fspp/generate.hpp"

#include <numeric>

#include "fspp/rng.hpp"

namespace fspp {

void GenSpec::validate() const {
    if (width < 1 || height < 1) throw Error("generator dimensions must be positive");
    if (alphabet.empty()) throw Error("generator alphabet must be nonempty");
    bool any = false;
    for (int v = 0; v <= 4; ++v) {
        if (weights[v] < 0) throw Error("generator weights must be non-negative");
        if (weights[v] > 0) {
            if (!alphabet.contains(v))
                throw Error("weight on value " + std::to_string(v) + " outside alphabet " +
                            alphabet.to_string());
            any = true;
        }
    }
    (void)any;  // all-zero weights mean uniform over the alphabet
}

Configuration generate(const GenSpec& spec) {
    spec.validate();
    std::array<int, 5> weights = spec.weights;
    if (std::accumulate(weights.begin(), weights.end(), 0) == 0)
        for (int v : spec.alphabet.values()) weights[v] = 1;
    std::array<uint64_t, 5> cumulative{};
    uint64_t total = 0;
    for (int v = 0; v <= 4; ++v) {
        total += static_cast<uint64_t>(weights[v]);
        cumulative[v] = total;
    }

    Rng rng(spec.seed);
    Configuration out(spec.width, spec.height);
    for (int y = 0; y < spec.height; ++y)
        for (int x = 0; x < spec.width; ++x) {
            const uint64_t pick = rng.below(total);
            int value = 0;
            while (pick >= cumulative[value]) ++value;
            out.set({x, y}, CellValue::grains(value));
        }
    return out;
}

}  // namespace fspp
