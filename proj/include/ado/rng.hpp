#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ado {

// Every randomized stage draws from an mt19937_64 seeded through this
// mixer, so a build is a pure function of (inputs, seed) and resampling
// rounds consume independent streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

enum class SeedStream : std::uint64_t {
    kSampleRound = 1,
    kTzLevels = 2,
    kSpannerClusters = 3,
    kGenerator = 4,
    kPairSample = 5,
    kBench = 6,
    kCompositeInner = 7,
    kCompositeFar = 8,
};

inline std::uint64_t derive_seed(std::uint64_t base, SeedStream stream, std::uint64_t round = 0) {
    std::uint64_t mixed = splitmix64(base ^ (static_cast<std::uint64_t>(stream) * 0xbf58476d1ce4e5b9ull));
    return splitmix64(mixed ^ round);
}

// Inclusion test "engine() < threshold" realizes a Bernoulli(p) draw with a
// fixed 64-bit threshold; p >= 1 saturates to always-true.
inline std::uint64_t bernoulli_threshold(long double p) {
    if (p >= 1.0L) return ~std::uint64_t{0};
    if (p <= 0.0L) return 0;
    long double scaled = p * 18446744073709551616.0L;  // 2^64
    if (scaled >= 18446744073709551615.0L) return ~std::uint64_t{0} - 1;
    return static_cast<std::uint64_t>(scaled);
}

inline bool bernoulli_draw(std::mt19937_64& eng, std::uint64_t threshold) {
    if (threshold == ~std::uint64_t{0}) return true;
    return eng() < threshold;
}

}  // namespace ado
