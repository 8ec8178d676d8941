#pragma once

#include <cstdint>

namespace cascadelab {

// splitmix64 finalizer (Steele, Lea, Flood). Used both as a sequential
// engine and as a stateless counter hash.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stateless hash of up to three words. All simulation randomness is derived
// from (run key, node, counter) triples through this, so results are
// independent of thread scheduling and of how many draws other nodes made.
constexpr std::uint64_t counter_hash(std::uint64_t a, std::uint64_t b = 0,
                                     std::uint64_t c = 0) {
    return splitmix64(splitmix64(splitmix64(a) ^ b) ^ c);
}

// Map 64 random bits to a double in [0, 1).
constexpr double to_unit(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

constexpr double uniform_at(std::uint64_t key, std::uint64_t b,
                            std::uint64_t c = 0) {
    return to_unit(counter_hash(key, b, c));
}

// Small sequential engine for single-threaded randomized algorithms
// (stub matching, power-iteration starts). Not std::mt19937 because we
// want byte-identical output across standard library implementations.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    double uniform() { return to_unit(next()); }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

private:
    std::uint64_t state_;
};

} // namespace cascadelab
