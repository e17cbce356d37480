#pragma once

#include <cstdint>

namespace fspp {

// splitmix64: tiny, portable, byte-identical everywhere. Standard-library
// distributions are implementation-defined, which would break the promise
// that a fixed seed reproduces output bit-for-bit.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Modulo bias is ~bound/2^64, irrelevant here.
    uint64_t below(uint64_t bound) { return next() % bound; }

    int range(int lo, int hi) {  // inclusive ends
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

  private:
    uint64_t state_;
};

// Stable derivation of per-trial seeds from a master seed.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    Rng r(master ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return r.next();
}

}  // namespace fspp
