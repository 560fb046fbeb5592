// Seeded pseudo-random numbers for generators and property tests.
// SplitMix64 (Steele/Lea/Flood 2014, public domain): the same seed yields the
// same stream on every platform, which std::mt19937 + distributions do not
// guarantee across standard libraries.
#pragma once

#include <cstdint>
#include <vector>

namespace hrlq {

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Multiply-shift mapping; the bias is < bound/2^64,
    // irrelevant at the bounds used here (all far below 2^32).
    uint64_t bounded(uint64_t bound) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int range(int lo, int hi) {  // inclusive ends
        return lo + static_cast<int>(bounded(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool chance(uint64_t num, uint64_t den) { return bounded(den) < num; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = bounded(i);
            std::swap(v[i - 1], v[j]);
        }
    }
};

}  // namespace hrlq
