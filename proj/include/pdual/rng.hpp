#pragma once

#include <cstdint>
#include <stdexcept>

namespace pdual {

// Deterministic PRNG (splitmix64 core). std::mt19937 output is portable but
// the standard distributions are not, so sampling is hand-rolled here.
class RandomSource {
public:
    explicit RandomSource(uint64_t seed, int64_t height_bound = 5)
        : state_(seed ^ 0x9e3779b97f4a7c15ULL), height_(height_bound) {
        if (height_bound < 1) throw std::invalid_argument("height bound must be >= 1");
    }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), rejection sampled so the distribution is exact.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::invalid_argument("below(0)");
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do { v = next_u64(); } while (v >= limit);
        return v % n;
    }

    // Uniform integer in [-height, height].
    int64_t small_int() {
        return static_cast<int64_t>(below(2 * static_cast<uint64_t>(height_) + 1)) - height_;
    }

    // Uniform nonzero integer in [-height, height].
    int64_t small_int_nonzero() {
        int64_t v;
        do { v = small_int(); } while (v == 0);
        return v;
    }

    int64_t height_bound() const { return height_; }

    // Independent child stream; never hand the same RandomSource to two consumers.
    RandomSource split(uint64_t tag) {
        uint64_t child = next_u64() ^ (tag * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
        return RandomSource(child, height_);
    }

private:
    uint64_t state_;
    int64_t height_;
};

} // namespace pdual
