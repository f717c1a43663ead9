#include "hnus/sampling.hpp"

#include "hnus/errors.hpp"
#include "hnus/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace hnus {

namespace {

constexpr double kGapFloor = 1e-3;
constexpr int kBisectionSteps = 80;
constexpr int kPoissonAttempts = 64;

SamplingMask full_mask(int n, SamplingPattern pattern) {
    SamplingMask mask{n, std::vector<int>(static_cast<std::size_t>(n)), pattern};
    std::iota(mask.indices.begin(), mask.indices.end(), 1);
    return mask;
}

void check_spec(const MaskSpec& spec) {
    if (spec.n < 1) {
        throw ParameterError("MaskSpec: n must be positive");
    }
    if (!(spec.rate > 0.0 && spec.rate <= 1.0)) {
        throw ParameterError("MaskSpec: rate must lie in (0, 1]");
    }
}

// One Poisson-gap schedule for a given rate multiplier. Gaps are Poisson with
// mean adj * sin(pi/2 * (p + 0.5) / (n + 1)) + floor, so they widen along the
// signal and the early (high-intensity) points are sampled densely.
std::vector<int> poisson_gap_schedule(int n, double adj, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> picks;
    int pos = 0;
    while (pos < n) {
        picks.push_back(pos + 1);
        ++pos;
        const double weight = std::sin(0.5 * std::numbers::pi * (pos + 0.5) / (n + 1.0));
        pos += static_cast<int>(rng.poisson(adj * weight + kGapFloor));
    }
    return picks;
}

} // namespace

std::string_view to_string(SamplingPattern pattern) noexcept {
    switch (pattern) {
    case SamplingPattern::poisson_gap:
        return "poisson_gap";
    case SamplingPattern::uniform_random:
        return "uniform_random";
    case SamplingPattern::truncation:
        return "truncation";
    }
    return "unknown";
}

SamplingPattern parse_pattern(std::string_view name) {
    if (name == "poisson_gap" || name == "poisson") {
        return SamplingPattern::poisson_gap;
    }
    if (name == "uniform_random" || name == "uniform") {
        return SamplingPattern::uniform_random;
    }
    if (name == "truncation") {
        return SamplingPattern::truncation;
    }
    throw ParameterError("unknown sampling pattern: " + std::string(name));
}

std::vector<bool> SamplingMask::membership() const {
    std::vector<bool> flags(static_cast<std::size_t>(n), false);
    for (int idx : indices) {
        flags[static_cast<std::size_t>(idx - 1)] = true;
    }
    return flags;
}

void validate(const SamplingMask& mask) {
    if (mask.n < 1) {
        throw ParameterError("SamplingMask: n must be positive");
    }
    if (mask.indices.size() > static_cast<std::size_t>(mask.n)) {
        throw ParameterError("SamplingMask: more indices than positions");
    }
    int prev = 0;
    for (int idx : mask.indices) {
        if (idx <= prev || idx > mask.n) {
            throw ParameterError("SamplingMask: indices must be strictly increasing within [1, n]");
        }
        prev = idx;
    }
}

int sample_count(int n, double rate) {
    if (!(rate > 0.0 && rate <= 1.0)) {
        throw ParameterError("sampling rate must lie in (0, 1]");
    }
    const double target = rate * static_cast<double>(n);
    if (target < 1.0) {
        throw ParameterError("sampling rate too low: rate * n < 1");
    }
    return std::min(n, static_cast<int>(std::floor(target + 0.5)));
}

SamplingMask poisson_gap_mask(const MaskSpec& spec) {
    check_spec(spec);
    const int m = sample_count(spec.n, spec.rate);
    if (m == spec.n) {
        return full_mask(spec.n, SamplingPattern::poisson_gap);
    }

    std::vector<int> best_over;
    for (int attempt = 0; attempt < kPoissonAttempts; ++attempt) {
        const std::uint64_t stream = derive_seed(spec.seed, 0x9a55u, static_cast<std::uint64_t>(attempt));
        double lo = 0.0;
        double hi = 2.0 * (static_cast<double>(spec.n) / m - 1.0) + 1.0;
        while (static_cast<int>(poisson_gap_schedule(spec.n, hi, stream).size()) > m) {
            hi *= 2.0;
        }
        for (int step = 0; step < kBisectionSteps; ++step) {
            const double mid = 0.5 * (lo + hi);
            auto picks = poisson_gap_schedule(spec.n, mid, stream);
            const int count = static_cast<int>(picks.size());
            if (count == m) {
                return SamplingMask{spec.n, std::move(picks), SamplingPattern::poisson_gap};
            }
            if (count > m) {
                if (best_over.empty() || picks.size() < best_over.size()) {
                    best_over = picks;
                }
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    // Count never landed exactly on m: thin the closest oversized schedule,
    // always keeping the first point.
    Rng rng(derive_seed(spec.seed, 0x7412u));
    while (static_cast<int>(best_over.size()) > m) {
        const auto drop = rng.uniform_int(1, static_cast<std::int64_t>(best_over.size()) - 1);
        best_over.erase(best_over.begin() + drop);
    }
    return SamplingMask{spec.n, std::move(best_over), SamplingPattern::poisson_gap};
}

SamplingMask uniform_mask(const MaskSpec& spec) {
    check_spec(spec);
    const int m = sample_count(spec.n, spec.rate);
    if (m == spec.n) {
        return full_mask(spec.n, SamplingPattern::uniform_random);
    }
    // Index 1 is always kept; the other m - 1 come from a partial shuffle of 2..n.
    std::vector<int> pool(static_cast<std::size_t>(spec.n - 1));
    std::iota(pool.begin(), pool.end(), 2);
    Rng rng(spec.seed);
    const auto pool_size = static_cast<std::int64_t>(pool.size());
    for (std::int64_t i = 0; i < m - 1; ++i) {
        const auto j = rng.uniform_int(i, pool_size - 1);
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<int> picks{1};
    picks.insert(picks.end(), pool.begin(), pool.begin() + (m - 1));
    std::sort(picks.begin(), picks.end());
    return SamplingMask{spec.n, std::move(picks), SamplingPattern::uniform_random};
}

SamplingMask truncation_mask(const MaskSpec& spec) {
    check_spec(spec);
    const int m = sample_count(spec.n, spec.rate);
    SamplingMask mask = full_mask(m, SamplingPattern::truncation);
    mask.n = spec.n;
    return mask;
}

SamplingMask make_mask(const MaskSpec& spec) {
    switch (spec.pattern) {
    case SamplingPattern::poisson_gap:
        return poisson_gap_mask(spec);
    case SamplingPattern::uniform_random:
        return uniform_mask(spec);
    case SamplingPattern::truncation:
        return truncation_mask(spec);
    }
    throw ParameterError("make_mask: unknown pattern");
}

ComplexVector undersample(const ComplexVector& x, const SamplingMask& mask) {
    if (x.size() != mask.n) {
        throw DimensionError("undersample: mask length differs from signal length");
    }
    ComplexVector y(mask.count());
    for (int k = 0; k < mask.count(); ++k) {
        y[k] = x[mask.indices[static_cast<std::size_t>(k)] - 1];
    }
    return y;
}

ComplexVector undersample(const TimeSignal& x, const SamplingMask& mask) {
    return undersample(x.samples, mask);
}

TimeSignal zero_fill(const ComplexVector& y, const SamplingMask& mask, double dt) {
    if (y.size() != mask.count()) {
        throw DimensionError("zero_fill: measurement count differs from mask size");
    }
    TimeSignal out{ComplexVector::Zero(mask.n), dt};
    for (int k = 0; k < mask.count(); ++k) {
        out.samples[mask.indices[static_cast<std::size_t>(k)] - 1] = y[k];
    }
    return out;
}

} // namespace hnus
