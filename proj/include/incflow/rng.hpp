#pragma once

#include <cstdint>

namespace incflow {

// SplitMix64. The instance file format pins generator output bit-for-bit, so
// the exact update and the derived draws below are part of the format contract:
//   next():       state += 0x9E3779B97F4A7C15, then two xor-multiply mixes
//   next_unit():  top 53 bits scaled to [0,1)
//   next_in(m):   next() % m, shifted to 1..m
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double prob) { return next_unit() < prob; }

    // uniform integer in [1, m]
    std::int64_t next_in(std::int64_t m) {
        return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(m)) + 1;
    }

private:
    std::uint64_t state_;
};

}  // namespace incflow
