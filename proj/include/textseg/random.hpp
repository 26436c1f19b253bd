#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace textseg {

/// Seeded generator whose output is fixed across platforms and standard
/// libraries: the engine is std::mt19937_64 (its sequence is fixed by the
/// standard) and bounded integers use rejection sampling on raw 64-bit draws
/// rather than std::uniform_int_distribution, whose algorithm is unspecified.
class Rng {
public:
    static constexpr std::string_view kName = "mt19937_64/rejection-v1";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

    /// Uniform in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01();

    /// Standard normal via Box-Muller.
    double normal();

    /// k distinct indices from [0, n), in draw order (partial Fisher-Yates).
    std::vector<std::size_t> sample(std::size_t n, std::size_t k);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace textseg
