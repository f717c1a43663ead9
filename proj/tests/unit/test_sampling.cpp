#include "hnus/errors.hpp"
#include "hnus/metrics.hpp"
#include "hnus/sampling.hpp"
#include "hnus/signal.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace hnus;

namespace {

void expect_well_formed(const SamplingMask& m, int n, int count) {
    ASSERT_EQ(m.n, n);
    ASSERT_EQ(m.count(), count);
    ASSERT_TRUE(std::is_sorted(m.indices.begin(), m.indices.end()));
    ASSERT_EQ(std::adjacent_find(m.indices.begin(), m.indices.end()), m.indices.end());
    ASSERT_GE(m.indices.front(), 1);
    ASSERT_LE(m.indices.back(), n);
}

ComplexVector counting(int n) {
    ComplexVector v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = Complex(i + 1.0, 0.0);
    }
    return v;
}

} // namespace

TEST(SampleCount, RoundsHalfUp) {
    EXPECT_EQ(sample_count(255, 0.25), 64);
    EXPECT_EQ(sample_count(10, 0.25), 3);
    EXPECT_EQ(sample_count(255, 1.0), 255);
    EXPECT_THROW(sample_count(255, 0.001), ParameterError);
    EXPECT_THROW(sample_count(255, 0.0), ParameterError);
    EXPECT_THROW(sample_count(255, 1.5), ParameterError);
}

TEST(PoissonGap, QuarterRateGivesSixtyFourIndicesWithFirst) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const SamplingMask m = poisson_gap_mask({255, 0.25, SamplingPattern::poisson_gap, seed});
        expect_well_formed(m, 255, 64);
        ASSERT_EQ(m.indices.front(), 1);
        EXPECT_EQ(m.pattern, SamplingPattern::poisson_gap);
    }
}

TEST(PoissonGap, ExactCountAcrossRates) {
    for (const double rate : {0.05, 0.1, 0.15, 0.2, 0.5, 0.9}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            expect_well_formed(poisson_gap_mask({255, rate, SamplingPattern::poisson_gap, seed}), 255,
                               sample_count(255, rate));
        }
    }
}

TEST(PoissonGap, DenserEarly) {
    double early = 0.0;
    double late = 0.0;
    int n_early = 0;
    int n_late = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const SamplingMask m = poisson_gap_mask({255, 0.25, SamplingPattern::poisson_gap, seed});
        for (std::size_t k = 1; k < m.indices.size(); ++k) {
            const int gap = m.indices[k] - m.indices[k - 1];
            if (m.indices[k - 1] <= 64) {
                early += gap;
                ++n_early;
            } else if (m.indices[k - 1] > 191) {
                late += gap;
                ++n_late;
            }
        }
    }
    EXPECT_LT(early / n_early, late / n_late);
}

TEST(PoissonGap, Deterministic) {
    const MaskSpec spec{255, 0.2, SamplingPattern::poisson_gap, 1234};
    EXPECT_EQ(poisson_gap_mask(spec), poisson_gap_mask(spec));
    const SamplingMask a = poisson_gap_mask(spec);
    const SamplingMask b = poisson_gap_mask({255, 0.2, SamplingPattern::poisson_gap, 1235});
    EXPECT_NE(a.indices, b.indices);
}

TEST(Masks, FullRateIsFullSet) {
    for (const auto p : {SamplingPattern::poisson_gap, SamplingPattern::uniform_random, SamplingPattern::truncation}) {
        const SamplingMask m = make_mask({255, 1.0, p, 3});
        expect_well_formed(m, 255, 255);
        EXPECT_EQ(m.indices.back(), 255);
        EXPECT_EQ(m.pattern, p);
    }
}

TEST(UniformMask, CountAndFirstIndex) {
    const SamplingMask m = uniform_mask({255, 0.25, SamplingPattern::uniform_random, 5});
    expect_well_formed(m, 255, 64);
    EXPECT_EQ(m.indices.front(), 1);
}

TEST(UniformMask, InclusionProbability) {
    std::vector<int> hits(256, 0);
    const int seeds = 10000;
    for (int s = 0; s < seeds; ++s) {
        for (const int idx : uniform_mask({255, 0.25, SamplingPattern::uniform_random, static_cast<std::uint64_t>(s)}).indices) {
            ++hits[static_cast<std::size_t>(idx)];
        }
    }
    EXPECT_EQ(hits[1], seeds);
    // The remaining M - 1 picks are spread over n - 1 positions.
    for (int i = 2; i <= 255; ++i) {
        EXPECT_NEAR(hits[static_cast<std::size_t>(i)] / static_cast<double>(seeds), 64.0 / 255.0, 0.02) << i;
    }
}

TEST(TruncationMask, LeadingBlockIgnoringSeed) {
    const SamplingMask a = truncation_mask({255, 0.25, SamplingPattern::truncation, 1});
    const SamplingMask b = truncation_mask({255, 0.25, SamplingPattern::truncation, 999});
    expect_well_formed(a, 255, 64);
    EXPECT_EQ(a.indices.back(), 64);
    EXPECT_EQ(a, b);
}

TEST(Patterns, NamesRoundTrip) {
    for (const auto p : {SamplingPattern::poisson_gap, SamplingPattern::uniform_random, SamplingPattern::truncation}) {
        EXPECT_EQ(parse_pattern(to_string(p)), p);
    }
    EXPECT_EQ(parse_pattern("poisson"), SamplingPattern::poisson_gap);
    EXPECT_EQ(parse_pattern("uniform"), SamplingPattern::uniform_random);
    EXPECT_THROW(parse_pattern("spiral"), ParameterError);
}

TEST(Undersample, PicksIndexedSamples) {
    SamplingMask m;
    m.n = 4;
    m.indices = {1, 3};
    const ComplexVector y = undersample(counting(4), m);
    ASSERT_EQ(y.size(), 2);
    EXPECT_EQ(y[0], Complex(1.0, 0.0));
    EXPECT_EQ(y[1], Complex(3.0, 0.0));
    EXPECT_THROW(undersample(counting(5), m), DimensionError);
}

TEST(Undersample, FullMaskIsIdentityAndNormShrinks) {
    const ComplexVector x = hnus::testing::random_complex(255, 4);
    EXPECT_EQ(undersample(x, make_mask({255, 1.0, SamplingPattern::poisson_gap, 0})), x);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SamplingMask m = make_mask({255, 0.2, SamplingPattern::poisson_gap, seed});
        EXPECT_LE(undersample(x, m).norm(), x.norm());
    }
}

TEST(ZeroFill, PlacesMeasurements) {
    SamplingMask m;
    m.n = 4;
    m.indices = {1, 3};
    const ComplexVector y = (ComplexVector(2) << Complex(1, 0), Complex(3, 0)).finished();
    const TimeSignal x = zero_fill(y, m);
    EXPECT_EQ(x.samples, (ComplexVector(4) << Complex(1, 0), Complex(0, 0), Complex(3, 0), Complex(0, 0)).finished());
    EXPECT_EQ(undersample(x, m), y);
    EXPECT_THROW(zero_fill(ComplexVector::Zero(3), m), DimensionError);
}

TEST(ZeroFill, RlneOracle) {
    const TimeSignal x = synthesize(presets::five_peak_model(), 255);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SamplingMask m = make_mask({255, 0.25, SamplingPattern::poisson_gap, seed});
        const ComplexVector y = undersample(x, m);
        const double oracle = std::sqrt(1.0 - y.squaredNorm() / x.samples.squaredNorm());
        EXPECT_NEAR(rlne(zero_fill(y, m), x), oracle, 1e-12);
    }
}

TEST(SamplingMask, ValidationRejectsMalformedMasks) {
    SamplingMask m;
    m.n = 5;
    m.indices = {1, 3, 3};
    EXPECT_THROW(validate(m), ParameterError);
    m.indices = {0, 2};
    EXPECT_THROW(validate(m), ParameterError);
    m.indices = {2, 6};
    EXPECT_THROW(validate(m), ParameterError);
    m.indices = {1, 4};
    EXPECT_NO_THROW(validate(m));
    EXPECT_EQ(m.membership(), (std::vector<bool>{true, false, false, true, false}));
}
