#pragma once

#include "hnus/esprit.hpp"

#include <string>
#include <vector>

namespace hnus {

/// Parameter errors of one method, one entry per trial.
struct MethodErrors {
    std::string name;
    std::vector<ComponentErrors> trials;
};

struct ScoreStats {
    double mean = 0.0;
    double std = 0.0;  ///< sample standard deviation, 0 for one trial
};

struct MethodScores {
    std::string name;
    ScoreStats amplitude;
    ScoreStats damping;
    ScoreStats phase;
    ScoreStats frequency;
    std::vector<ComponentErrors> per_trial;  ///< the scores themselves, per trial
};

/// Per parameter and trial, ranks methods by absolute error: best scores 4,
/// the next 3, and so on. Equal errors are ordered by method name, so the
/// lexicographically smaller name takes the higher score. NaN errors rank
/// last. Requires 2 to 4 methods with distinct names and equal trial counts.
/// Output follows the input order.
std::vector<MethodScores> score_methods(const std::vector<MethodErrors>& methods);

std::string scores_csv(const std::vector<MethodScores>& scores);

} // namespace hnus
