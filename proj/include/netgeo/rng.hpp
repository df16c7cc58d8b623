#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace netgeo {

// Seedable random source with a portable draw sequence.
//
// The engine is std::mt19937_64, whose output stream is fixed by the standard,
// and every distribution transform is implemented here rather than delegated
// to std::*_distribution (whose streams are implementation-defined). Draw
// accounting: uniform() consumes one engine step, gaussian() always consumes
// exactly two. Consumers document their own draw order on top of this.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). n must be positive.
    int32_t uniform_int(int32_t n) {
        const auto k = static_cast<int32_t>(uniform() * static_cast<double>(n));
        return k < n ? k : n - 1;
    }

    // Standard normal via Box-Muller; two uniforms per call, no cached spare.
    double gaussian() {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

private:
    std::mt19937_64 engine_;
};

// 64-bit finalizer (splitmix64); used to derive independent per-task seeds.
constexpr uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Folds a sequence of fields into one seed; order-sensitive.
constexpr uint64_t mix_seed(uint64_t acc, uint64_t field) { return mix64(acc ^ mix64(field)); }

}  // namespace netgeo
