#include "hnus/errors.hpp"
#include "hnus/experiment.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace hnus;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

ExperimentSpec fast_spec() {
    ExperimentSpec s;
    s.methods = {Method::zero_fill, Method::cs, Method::lrhmf};
    s.orders = {1, 3};
    s.rates = {0.25, 0.5};
    s.trials = 3;
    s.base_seed = 21;
    s.configs.lrhmf.max_iters = 40;
    return s;
}

} // namespace

TEST(Methods, NamesRoundTripAndUnknownIsRejected) {
    for (const Method m : {Method::zero_fill, Method::cs, Method::lrhm, Method::lrhmf}) {
        EXPECT_EQ(parse_method(to_string(m)), m);
    }
    EXPECT_THROW(parse_method("dhmf"), ParameterError);
}

TEST(Methods, ComponentSigmaSplitsVarianceEvenly) {
    const double s = component_sigma(0.05);
    EXPECT_NEAR(2.0 * s * s, 0.05 * 0.05, 1e-18);
}

TEST(Classify, Thresholds) {
    EXPECT_EQ(classify_rlne(0.05), "success");
    EXPECT_EQ(classify_rlne(0.1), "boundary");
    EXPECT_EQ(classify_rlne(0.19), "boundary");
    EXPECT_EQ(classify_rlne(0.2), "failure");
    EXPECT_EQ(classify_rlne(NAN), "failure");
}

TEST(MeanStd, SampleStatistics) {
    const MeanStd ms = mean_std({1.0, 2.0, 3.0, 4.0});
    EXPECT_DOUBLE_EQ(ms.mean, 2.5);
    EXPECT_DOUBLE_EQ(ms.std, std::sqrt(5.0 / 3.0));
    EXPECT_EQ(mean_std({7.0}).std, 0.0);
}

TEST(RunGrid, CellsMatchDirectSolverCalls) {
    ExperimentSpec s;
    s.methods = {Method::lrhm, Method::lrhmf};
    s.orders = {1, 4};
    s.rates = {1.0};
    s.trials = 1;
    s.noise_sigma = 0.0;
    s.configs.lrhm.max_iters = 60;
    s.configs.lrhmf.max_iters = 60;
    const GridResult g = run_grid(s);
    ASSERT_EQ(g.cells.size(), 4u);
    for (std::size_t oi = 0; oi < 2; ++oi) {
        const TrialData t = make_trial(s, oi, 0, 0);
        SolverConfig lrhm = s.configs.lrhm;
        SolverConfig lrhmf = s.configs.lrhmf;
        lrhm.track_nuclear_norm = false;
        lrhmf.track_nuclear_norm = false;
        EXPECT_EQ(g.cells[2 * oi].rlne[0], rlne(lrhm_reconstruct(t.measured, t.mask, lrhm).x_hat, t.clean));
        EXPECT_EQ(g.cells[2 * oi + 1].rlne[0], rlne(lrhmf_reconstruct(t.measured, t.mask, lrhmf).x_hat, t.clean));
        EXPECT_EQ(g.cells[2 * oi].failures, 0);
    }
}

TEST(RunGrid, CsvShapeAndFiniteCells) {
    const ExperimentSpec s = fast_spec();
    const GridResult g = run_grid(s);
    const auto rows = parse_csv(grid_csv(g));
    ASSERT_EQ(rows.size(), 1u + 2 * 2 * 3);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"method", "J", "rate", "trials", "mean_rlne", "std_rlne"}));
    for (std::size_t r = 1; r < rows.size(); ++r) {
        ASSERT_EQ(rows[r].size(), 6u);
        EXPECT_EQ(rows[r][3], "3");
        EXPECT_TRUE(std::isfinite(std::stod(rows[r][4])));
        EXPECT_TRUE(std::isfinite(std::stod(rows[r][5])));
    }
    EXPECT_EQ(rows[1][0], "zero_fill");
    EXPECT_EQ(rows[1][1], "1");
    EXPECT_EQ(rows[1][2], "0.25");
}

TEST(RunGrid, DeterministicAcrossRunsAndThreadCounts) {
    ExperimentSpec s = fast_spec();
    s.threads = 1;
    const std::string sequential = grid_csv(run_grid(s));
    s.threads = 4;
    const std::string parallel = grid_csv(run_grid(s));
    const std::string again = grid_csv(run_grid(s));
    EXPECT_EQ(sequential, parallel);
    EXPECT_EQ(parallel, again);
    s.base_seed = 22;
    EXPECT_NE(grid_csv(run_grid(s)), sequential);
}

TEST(RunGrid, MethodsShareTrialDraws) {
    ExperimentSpec s = fast_spec();
    s.methods = {Method::zero_fill};
    const GridResult g = run_grid(s);
    const TrialData t = make_trial(s, 1, 0, 2);
    const double oracle = std::sqrt(1.0 - undersample(t.clean, t.mask).squaredNorm() / t.clean.samples.squaredNorm());
    // With noise the zero-fill error differs slightly from the noiseless oracle.
    EXPECT_NEAR(g.cells[2].rlne[2], oracle, 0.1);
    s.noise_sigma = 0.0;
    EXPECT_NEAR(run_grid(s).cells[2].rlne[2], oracle, 1e-12);
}

TEST(RunGrid, JsonReportCarriesClassification) {
    const ExperimentSpec s = fast_spec();
    const std::string json = grid_json(run_grid(s), s);
    EXPECT_NE(json.find("\"classification\""), std::string::npos);
    EXPECT_NE(json.find("\"rlne\": ["), std::string::npos);
    EXPECT_NE(json.find("\"success_below\": 0.1"), std::string::npos);
    EXPECT_NE(json.find("\"boundary_below\": 0.2"), std::string::npos);
}

TEST(RunGrid, InvalidSpecsAreRejected) {
    ExperimentSpec s = fast_spec();
    s.trials = 0;
    EXPECT_THROW(run_grid(s), ParameterError);
    s = fast_spec();
    s.rates = {0.0};
    EXPECT_THROW(run_grid(s), ParameterError);
    s = fast_spec();
    s.orders = {};
    EXPECT_THROW(run_grid(s), ParameterError);
}

TEST(RunCase, FivePeakModelPeaksAreMatched) {
    const CaseInput in = make_case(presets::five_peak_model(), 255, {255, 0.25, SamplingPattern::poisson_gap, 4}, 0.05, 5);
    CaseOptions opts;
    opts.noise_sigma = 0.05;
    const CaseReport rep = run_case(in, Method::lrhmf, opts);
    EXPECT_EQ(rep.reference_peaks.size(), 5u);
    EXPECT_TRUE(rep.matching.missing.empty());
    EXPECT_EQ(rep.matching.pairs.size(), 5u);
    for (const auto& p : rep.matching.pairs) {
        EXPECT_LE(p.distance, opts.d_max);
    }
    EXPECT_EQ(static_cast<int>(rep.result.history.size()), rep.result.iterations);
    EXPECT_FALSE(std::isnan(rep.result.history.back().nuclear_norm));
    EXPECT_NE(case_json(rep).find("\"peak_correlations\""), std::string::npos);
}

TEST(RunCase, ZeroFillMatchesClosedForm) {
    const CaseInput in = make_case(presets::four_peak_model(), 255, {255, 0.25, SamplingPattern::poisson_gap, 8}, 0.0, 1);
    const CaseReport rep = run_case(in, Method::zero_fill);
    const double oracle = std::sqrt(1.0 - in.measured.squaredNorm() / in.clean.samples.squaredNorm());
    EXPECT_NEAR(rep.rlne, oracle, 1e-12);
    EXPECT_EQ(rep.rlne, rep.zero_fill_rlne);
}

TEST(Evaluate, ScoresResultFiles) {
    DatasetSpec spec;
    spec.generator.n_points = 32;
    spec.generator.j_range = {1, 2};
    std::vector<DatasetRecord> records;
    for (int q = 0; q < 4; ++q) {
        records.push_back(make_record(spec, record_seeds(5, q)));
    }
    Dataset ref;
    ref.header = header_for(records, 1.0);
    ref.records = records;

    const Evaluation self = evaluate(ref, ref);
    EXPECT_EQ(self.mean_rlne, 0.0);
    EXPECT_GT(self.mean_zero_fill_rlne, 0.0);

    Dataset zf = ref;
    for (auto& r : zf.records) {
        r.clean = zero_fill(r.measured, r.sampling_mask(32)).samples;
    }
    const Evaluation e = evaluate(ref, zf);
    ASSERT_EQ(e.rows.size(), 4u);
    for (const auto& row : e.rows) {
        EXPECT_DOUBLE_EQ(row.rlne, row.zero_fill_rlne);
    }
    EXPECT_NE(evaluation_csv(e).find("record,J,rlne,zero_fill_rlne"), std::string::npos);

    Dataset shorter = ref;
    shorter.records.pop_back();
    shorter.header.count = 3;
    EXPECT_THROW(evaluate(ref, shorter), FormatError);
    Dataset remasked = ref;
    remasked.records[0].mask[1] += 0;
    remasked.records[0].mask.back() = remasked.records[0].mask.back() == 32 ? 31 : 32;
    EXPECT_THROW(evaluate(ref, remasked), FormatError);
}
