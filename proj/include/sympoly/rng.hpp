#pragma once

#include <cstdint>

namespace sympoly {

// Deterministic splitmix64 generator. Reports and fixtures must reproduce
// bit-identically from a seed across platforms, so we avoid the
// implementation-defined std:: distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). bound = 0 is a caller bug; returns 0.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        return next() % bound;
    }

    // Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Independent stream for a subtask; deterministic in (seed, tag).
    Rng fork(std::uint64_t tag) {
        Rng child(state_ ^ (0x632be59bd9b4e019ULL * (tag + 1)));
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

}  // namespace sympoly
