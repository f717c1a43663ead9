#include "hnus/scoring.hpp"

#include "hnus/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

namespace hnus {

namespace {

constexpr double kTopScore = 4.0;

double ComponentErrors::*const kFields[] = {&ComponentErrors::amplitude, &ComponentErrors::damping,
                                            &ComponentErrors::phase, &ComponentErrors::frequency};

ScoreStats stats(const std::vector<ComponentErrors>& scores, double ComponentErrors::*field) {
    ScoreStats s;
    const auto n = static_cast<double>(scores.size());
    for (const auto& e : scores) {
        s.mean += e.*field;
    }
    s.mean /= n;
    if (scores.size() > 1) {
        double ss = 0.0;
        for (const auto& e : scores) {
            ss += (e.*field - s.mean) * (e.*field - s.mean);
        }
        s.std = std::sqrt(ss / (n - 1.0));
    }
    return s;
}

} // namespace

std::vector<MethodScores> score_methods(const std::vector<MethodErrors>& methods) {
    if (methods.size() < 2 || methods.size() > 4) {
        throw ParameterError("score_methods: needs 2 to 4 methods");
    }
    const std::size_t trials = methods.front().trials.size();
    std::set<std::string> names;
    for (const auto& m : methods) {
        if (m.trials.size() != trials) {
            throw DimensionError("score_methods: methods have different trial counts");
        }
        if (!names.insert(m.name).second) {
            throw ParameterError("score_methods: duplicate method name '" + m.name + "'");
        }
    }
    if (trials == 0) {
        throw ParameterError("score_methods: no trials");
    }

    std::vector<MethodScores> out(methods.size());
    for (std::size_t i = 0; i < methods.size(); ++i) {
        out[i].name = methods[i].name;
        out[i].per_trial.resize(trials);
    }
    std::vector<std::size_t> order(methods.size());
    for (std::size_t t = 0; t < trials; ++t) {
        for (const auto field : kFields) {
            std::iota(order.begin(), order.end(), std::size_t{0});
            auto key = [&](std::size_t i) {
                const double e = methods[i].trials[t].*field;
                return std::isnan(e) ? HUGE_VAL : std::abs(e);
            };
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                const double ka = key(a);
                const double kb = key(b);
                if (ka != kb) {
                    return ka < kb;
                }
                return methods[a].name < methods[b].name;
            });
            for (std::size_t rank = 0; rank < order.size(); ++rank) {
                out[order[rank]].per_trial[t].*field = kTopScore - static_cast<double>(rank);
            }
        }
    }
    for (auto& m : out) {
        m.amplitude = stats(m.per_trial, &ComponentErrors::amplitude);
        m.damping = stats(m.per_trial, &ComponentErrors::damping);
        m.phase = stats(m.per_trial, &ComponentErrors::phase);
        m.frequency = stats(m.per_trial, &ComponentErrors::frequency);
    }
    return out;
}

std::string scores_csv(const std::vector<MethodScores>& scores) {
    std::string out =
        "method,amplitude_mean,amplitude_std,damping_mean,damping_std,phase_mean,phase_std,frequency_mean,frequency_std\n";
    char buf[64];
    for (const auto& s : scores) {
        out += s.name;
        for (const ScoreStats* st : {&s.amplitude, &s.damping, &s.phase, &s.frequency}) {
            std::snprintf(buf, sizeof buf, ",%.4f,%.4f", st->mean, st->std);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

} // namespace hnus
