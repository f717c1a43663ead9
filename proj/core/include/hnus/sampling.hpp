#pragma once

#include "hnus/types.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hnus {

enum class SamplingPattern { poisson_gap, uniform_random, truncation };

std::string_view to_string(SamplingPattern pattern) noexcept;
/// Accepts "poisson_gap"/"poisson", "uniform_random"/"uniform", "truncation".
SamplingPattern parse_pattern(std::string_view name);

/// Set of acquired positions Omega, 1-based and strictly increasing.
struct SamplingMask {
    int n = 0;
    std::vector<int> indices;
    SamplingPattern pattern = SamplingPattern::poisson_gap;

    [[nodiscard]] int count() const noexcept { return static_cast<int>(indices.size()); }
    [[nodiscard]] double rate() const noexcept {
        return n > 0 ? static_cast<double>(indices.size()) / n : 0.0;
    }
    /// Dense membership flags, zero-based.
    [[nodiscard]] std::vector<bool> membership() const;

    friend bool operator==(const SamplingMask&, const SamplingMask&) = default;
};

void validate(const SamplingMask& mask);

struct MaskSpec {
    int n = 255;
    double rate = 0.25;
    SamplingPattern pattern = SamplingPattern::poisson_gap;
    std::uint64_t seed = 0;
};

/// round(rate * n) with halves rounded up; throws if rate * n < 1.
int sample_count(int n, double rate);

SamplingMask poisson_gap_mask(const MaskSpec& spec);
SamplingMask uniform_mask(const MaskSpec& spec);
SamplingMask truncation_mask(const MaskSpec& spec);
/// Dispatches on spec.pattern.
SamplingMask make_mask(const MaskSpec& spec);

/// y[k] = x[Omega[k] - 1].
ComplexVector undersample(const ComplexVector& x, const SamplingMask& mask);
ComplexVector undersample(const TimeSignal& x, const SamplingMask& mask);

/// Places y at Omega and zeros elsewhere.
TimeSignal zero_fill(const ComplexVector& y, const SamplingMask& mask, double dt = 1.0);

} // namespace hnus
