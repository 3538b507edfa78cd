#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace tpw {

/// mt19937_64 with integer and real mappings written out by hand, so that a
/// seed yields the same stream on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi] by rejection sampling.
    int uniform(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return lo + static_cast<int>(x % span);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) std::swap(items[i], items[uniform(0, i)]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace tpw
