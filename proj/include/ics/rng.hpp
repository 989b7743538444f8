#pragma once

// Counter-based pseudo-random generator: output k is a fixed integer hash of
// (key, k), so streams are seedable, jumpable and independent per (seed,
// stream) pair. Distribution sampling is done by explicit inverse transforms
// to keep sequences identical across platforms.

#include <cmath>
#include <cstdint>

namespace ics {

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ull))) {}

    explicit CounterRng(std::uint64_t seed) : CounterRng(seed, 0) {}

    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ull; }

    result_type operator()() { return mix(key_ + counter_++ * 0x9E3779B97F4A7C15ull); }

    void jump_to(std::uint64_t counter) { counter_ = counter; }

    // uniform on (0, 1), never exactly 0 or 1
    double uniform() {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double exponential(double rate) { return -std::log(uniform()) / rate; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace ics
