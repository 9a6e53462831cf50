#pragma once

#include <cstdint>

namespace gbk {

// Fixed-recurrence generator so randomized verdicts reproduce byte-for-byte
// across platforms (standard-library distributions do not guarantee that).
struct Lcg {
    uint64_t state;

    explicit Lcg(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}

    uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }

    long below(long n) { return n <= 1 ? 0 : (long)(next() % (uint64_t)n); }
};

} // namespace gbk
