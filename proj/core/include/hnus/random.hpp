#pragma once

#include <cstdint>
#include <random>

namespace hnus {

/// Seeded random stream with portable transforms.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are implementation-defined, so every
/// transform used by this library (uniform reals, bounded integers, Gaussian,
/// Poisson) is written out here to keep seeded results identical across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform integer on [lo, hi], inclusive, without modulo bias.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    /// Standard normal via the Box-Muller transform.
    double normal();
    /// Poisson draw by CDF inversion. Requires 0 <= mean <= 700.
    std::int64_t poisson(double mean);

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t value) noexcept;

/// Stream seed for (base, a, b), e.g. (base seed, grid cell, trial).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) noexcept;

} // namespace hnus
