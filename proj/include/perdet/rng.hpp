#pragma once

#include "perdet/rational.hpp"

#include <cstdint>

namespace perdet {

// splitmix64: deterministic across platforms, good enough for test suites
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    uint64_t below(uint64_t n) { return next() % n; }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }
    // nonzero rational with small numerator/denominator
    Rational rational(long max_num = 12, long max_den = 6) {
        long num = range(-max_num, max_num);
        if (num == 0) num = 1;
        long den = range(1, max_den);
        return Rational(num, den);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace perdet
