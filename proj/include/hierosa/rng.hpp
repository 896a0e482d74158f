#pragma once

#include <cstdint>
#include <random>

namespace hierosa {

/// Deterministic random source. Wraps std::mt19937_64 (whose raw output
/// sequence is pinned by the standard) and derives uniform values with
/// fixed, portable arithmetic instead of the implementation-defined
/// standard distributions.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    /// Independent child stream, e.g. one per masking trial.
    static Rng child(uint64_t seed, uint64_t stream) {
        // splitmix-style mix so (seed, stream) pairs do not collide trivially
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n must be > 0.
    uint64_t below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64);
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace hierosa
