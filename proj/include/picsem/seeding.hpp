#pragma once

#include <cstdint>

namespace picsem {

// splitmix64 (Steele, Lea, Flood). Used as a cheap bijective mixer so that
// per-trial and per-sweep-point random streams can be derived from
// (master seed, index) counters without any shared state. Merge order of
// results derived from these streams is therefore irrelevant, which is what
// makes simulations reproducible for any thread count.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Salts keep the trial-stream and sweep-point derivations disjoint.
inline constexpr uint64_t kTrialSalt = 0x7f4a7c15f39cc060ULL;
inline constexpr uint64_t kPointSalt = 0xd1b54a32d192ed03ULL;

inline uint64_t derive_seed(uint64_t seed, uint64_t salt, uint64_t index) {
    uint64_t state = seed ^ (salt + 0x9e3779b97f4a7c15ULL * (index + 1));
    splitmix64(state);
    return splitmix64(state);
}

} // namespace picsem
