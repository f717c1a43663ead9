#include "hnus/errors.hpp"
#include "hnus/scoring.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hnus;

namespace {

ComponentErrors uniform_error(double e) {
    return {e, e, e, e};
}

// Score by counting: 4 minus the number of methods ranked ahead.
double oracle_score(const std::vector<MethodErrors>& methods, std::size_t who, std::size_t trial,
                    double ComponentErrors::*field) {
    const double mine = methods[who].trials[trial].*field;
    int ahead = 0;
    for (std::size_t k = 0; k < methods.size(); ++k) {
        if (k == who) {
            continue;
        }
        const double other = methods[k].trials[trial].*field;
        if (other < mine || (other == mine && methods[k].name < methods[who].name)) {
            ++ahead;
        }
    }
    return 4.0 - ahead;
}

} // namespace

TEST(ScoreMethods, StrictlyBestMethodScoresFour) {
    std::vector<MethodErrors> m{{"a", {}}, {"b", {}}, {"c", {}}, {"d", {}}};
    for (int t = 0; t < 6; ++t) {
        m[0].trials.push_back(uniform_error(0.01));
        m[1].trials.push_back(uniform_error(0.2 + t));
        m[2].trials.push_back(uniform_error(0.1 * t + 0.05));
        m[3].trials.push_back(uniform_error(0.3));
    }
    const auto s = score_methods(m);
    EXPECT_EQ(s[0].amplitude.mean, 4.0);
    EXPECT_EQ(s[0].amplitude.std, 0.0);
    EXPECT_EQ(s[0].frequency.mean, 4.0);
    EXPECT_EQ(s[0].phase.std, 0.0);
}

TEST(ScoreMethods, TiesGoToLexicographicallySmallerName) {
    const std::vector<MethodErrors> m{{"zeta", {uniform_error(0.5)}}, {"alpha", {uniform_error(0.5)}}};
    const auto s = score_methods(m);
    EXPECT_EQ(s[0].name, "zeta");
    EXPECT_EQ(s[0].damping.mean, 3.0);
    EXPECT_EQ(s[1].damping.mean, 4.0);
}

TEST(ScoreMethods, HandBuiltTableMatchesRankOracle) {
    std::vector<MethodErrors> m{{"lrhmf", {}}, {"cs", {}}, {"lrhm", {}}};
    const double table[3][4][4] = {
        {{0.1, 2.0, 0.3, 0.01}, {0.2, 1.0, 0.1, 0.02}, {0.5, 0.5, 0.5, 0.5}, {0.0, 0.0, 0.2, 0.0}},
        {{0.3, 1.0, 0.3, 0.02}, {0.1, 3.0, 0.2, 0.02}, {0.5, 0.4, 0.6, 0.1}, {0.1, 0.1, 0.1, 0.0}},
        {{0.2, 3.0, 0.1, 0.03}, {0.3, 1.0, 0.3, 0.01}, {0.4, 0.5, 0.5, 0.7}, {0.0, 0.2, 0.2, 0.0}},
    };
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t t = 0; t < 4; ++t) {
            m[k].trials.push_back({table[k][t][0], table[k][t][1], table[k][t][2], table[k][t][3]});
        }
    }
    const auto s = score_methods(m);
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t t = 0; t < 4; ++t) {
            EXPECT_EQ(s[k].per_trial[t].amplitude, oracle_score(m, k, t, &ComponentErrors::amplitude));
            EXPECT_EQ(s[k].per_trial[t].damping, oracle_score(m, k, t, &ComponentErrors::damping));
            EXPECT_EQ(s[k].per_trial[t].phase, oracle_score(m, k, t, &ComponentErrors::phase));
            EXPECT_EQ(s[k].per_trial[t].frequency, oracle_score(m, k, t, &ComponentErrors::frequency));
        }
    }
    // Spot values by hand: trial 0 amplitude ranks lrhmf (0.1), lrhm (0.2), cs (0.3).
    EXPECT_EQ(s[0].per_trial[0].amplitude, 4.0);
    EXPECT_EQ(s[2].per_trial[0].amplitude, 3.0);
    EXPECT_EQ(s[1].per_trial[0].amplitude, 2.0);
    // Trial 3 frequency is a three-way tie: cs, lrhm, lrhmf by name.
    EXPECT_EQ(s[1].per_trial[3].frequency, 4.0);
    EXPECT_EQ(s[2].per_trial[3].frequency, 3.0);
    EXPECT_EQ(s[0].per_trial[3].frequency, 2.0);
    // The reported mean is the average of the per-trial scores.
    double mean = 0.0;
    for (const auto& e : s[0].per_trial) {
        mean += e.amplitude / 4.0;
    }
    EXPECT_DOUBLE_EQ(s[0].amplitude.mean, mean);
}

TEST(ScoreMethods, NanErrorsRankLast) {
    const std::vector<MethodErrors> m{{"a", {uniform_error(NAN)}}, {"b", {uniform_error(5.0)}}};
    const auto s = score_methods(m);
    EXPECT_EQ(s[0].amplitude.mean, 3.0);
    EXPECT_EQ(s[1].amplitude.mean, 4.0);
}

TEST(ScoreMethods, Preconditions) {
    EXPECT_THROW(score_methods({{"a", {uniform_error(1)}}}), ParameterError);
    EXPECT_THROW(score_methods({{"a", {uniform_error(1)}}, {"a", {uniform_error(2)}}}), ParameterError);
    EXPECT_THROW(score_methods({{"a", {uniform_error(1)}}, {"b", {}}}), DimensionError);
    EXPECT_THROW(score_methods({{"a", {}}, {"b", {}}, {"c", {}}, {"d", {}}, {"e", {}}}), ParameterError);
}
