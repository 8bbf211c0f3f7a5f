#pragma once
// Deterministic randomness: a thin engine wrapper with the draw primitives
// the protocol needs, plus counter-style seed derivation so concurrent runs
// get independent, schedule-free streams.

#include <cstdint>
#include <random>
#include <vector>

namespace qlls {

// splitmix64 finalizer; full-period 64-bit mixing.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream seed for run `run` of a sweep point with `samples` shots.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t samples, std::uint64_t run) {
    return mix64(mix64(mix64(master) ^ samples) ^ run);
}

class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53 random bits.
    double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return u01() < p; }

    // Uniform index in [0, n) via 128-bit multiply (no modulo bias at scale).
    std::size_t index(std::size_t n) {
        const unsigned __int128 wide = static_cast<unsigned __int128>(engine_()) * n;
        return static_cast<std::size_t>(wide >> 64);
    }

    // Index into a cumulative weight table (last entry = total mass).
    std::size_t from_cdf(const std::vector<double>& cdf) {
        const double u = u01() * cdf.back();
        std::size_t lo = 0;
        std::size_t hi = cdf.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cdf[mid] > u) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        return lo;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace qlls
