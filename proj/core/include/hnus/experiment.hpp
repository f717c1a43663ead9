#pragma once

#include "hnus/esprit.hpp"
#include "hnus/metrics.hpp"
#include "hnus/record_io.hpp"
#include "hnus/sampling.hpp"
#include "hnus/signal.hpp"
#include "hnus/solvers.hpp"
#include "hnus/spectrum.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hnus {

enum class Method { zero_fill, cs, lrhm, lrhmf };

std::string_view to_string(Method method) noexcept;
/// Accepts "zero_fill", "cs", "lrhm", "lrhmf"; throws ParameterError otherwise.
Method parse_method(std::string_view name);

/// Per-component standard deviation for a complex noise level: the total
/// complex std is split evenly between the real and imaginary parts.
double component_sigma(double complex_sigma) noexcept;

struct MethodConfigs {
    SolverConfig lrhmf{};
    SolverConfig lrhm{};
    CsConfig cs{};  ///< noise_sigma is filled in from the experiment noise level
};

/// Reconstructs one measurement vector with the chosen method.
ReconResult reconstruct(Method method, const ComplexVector& y, const SamplingMask& mask,
                        const MethodConfigs& configs, double noise_sigma,
                        const TimeSignal* truth = nullptr);

struct ExperimentSpec {
    std::vector<Method> methods{Method::lrhmf};
    std::vector<int> orders{1};
    std::vector<double> rates{0.25};
    int trials = 50;
    double noise_sigma = 0.05;  ///< complex standard deviation, see component_sigma
    std::uint64_t base_seed = 1;
    SamplingPattern pattern = SamplingPattern::poisson_gap;
    GeneratorSpec generator{};  ///< j_range is overridden per grid row
    MethodConfigs configs{};
    int threads = 0;  ///< 0: HNUS_THREADS, else hardware concurrency
};

void validate(const ExperimentSpec& spec);

/// Measurement draw for one grid trial. All methods in a cell see the same draws.
struct TrialData {
    ExponentialModel model;
    TimeSignal clean;
    SamplingMask mask;
    ComplexVector measured;
};

/// Model, mask and noise for (cell, trial); cell = order_index * rates + rate_index.
TrialData make_trial(const ExperimentSpec& spec, std::size_t order_index, std::size_t rate_index,
                     int trial);

struct CellResult {
    Method method = Method::lrhmf;
    int order = 1;
    double rate = 0.25;
    std::vector<double> rlne;  ///< per trial, NaN where the solver failed
    std::vector<std::string> errors;  ///< per trial, empty on success
    int failures = 0;
    double mean = 0.0;  ///< over successful trials
    double std = 0.0;   ///< sample standard deviation over successful trials

    [[nodiscard]] int succeeded() const noexcept {
        return static_cast<int>(rlne.size()) - failures;
    }
};

/// "success" below 0.1, "boundary" in [0.1, 0.2), "failure" from 0.2.
std::string_view classify_rlne(double mean_rlne) noexcept;

struct GridResult {
    std::vector<CellResult> cells;  ///< ordered by order, rate, then method as listed
};

/// Trials run concurrently; every trial derives its streams from
/// (base seed, cell, trial), so results do not depend on scheduling.
GridResult run_grid(const ExperimentSpec& spec);

/// Header `method,J,rate,trials,mean_rlne,std_rlne`. Cells where every trial
/// failed are left out (they appear in the JSON report).
std::string grid_csv(const GridResult& grid);
std::string grid_json(const GridResult& grid, const ExperimentSpec& spec);

/// Number of worker threads: HNUS_THREADS if set and positive, else the
/// hardware concurrency (at least 1).
int default_thread_count();

/// Single reconstruction with diagnostics.
struct CaseInput {
    ExponentialModel model;
    TimeSignal clean;
    SamplingMask mask;
    ComplexVector measured;
};

/// Draws mask and noise for a given model.
CaseInput make_case(const ExponentialModel& model, int n_points, const MaskSpec& mask_spec,
                    double noise_sigma, std::uint64_t noise_seed);

struct CaseOptions {
    MethodConfigs configs{};
    double noise_sigma = 0.0;       ///< complex std, used by CS and the peak floor
    double peak_floor_ratio = 0.02; ///< relative to the largest reference magnitude
    double d_max = 3.0;
    int window_w = 10;
};

struct CaseReport {
    Method method = Method::lrhmf;
    ReconResult result;
    double rlne = 0.0;
    double zero_fill_rlne = 0.0;
    HankelDiagnostics reference_diagnostics;
    HankelDiagnostics recon_diagnostics;
    Spectrum reference_spectrum;
    Spectrum recon_spectrum;
    double peak_floor = 0.0;
    PeakSet reference_peaks;
    PeakSet recon_peaks;
    PeakMatching matching;
    std::vector<double> peak_correlations;  ///< one per reference peak
};

CaseReport run_case(const CaseInput& input, Method method, const CaseOptions& options = {});
std::string case_json(const CaseReport& report);

/// Dataset generation.
struct DatasetSpec {
    GeneratorSpec generator{};
    double noise_sigma = 0.05;  ///< complex std
    double rate = 0.25;
    SamplingPattern pattern = SamplingPattern::poisson_gap;
    int count = 4000;
    double train_fraction = 0.9;
    std::uint64_t base_seed = 1;
};

struct RecordSeeds {
    std::uint64_t model = 0;
    std::uint64_t mask = 0;
    std::uint64_t noise = 0;
};

struct DatasetManifest {
    int count = 0;
    int train_count = 0;
    int validation_count = 0;
    std::string generator_digest;
    DatasetSpec spec;
    std::vector<RecordSeeds> seeds;  ///< one per record; train records first
};

/// Seeds for record q; the same triple always regenerates the same record.
RecordSeeds record_seeds(std::uint64_t base_seed, int record);
DatasetRecord make_record(const DatasetSpec& spec, const RecordSeeds& seeds);

/// train_count = floor(fraction * count).
int train_count(int count, double fraction);

/// Writes train.bin, validation.bin (omitted when empty) and manifest.json into `dir`.
DatasetManifest make_dataset(const DatasetSpec& spec, const std::filesystem::path& dir);
std::string manifest_json(const DatasetManifest& manifest);
DatasetManifest parse_manifest(std::string_view json);

/// Hex FNV-1a digest of the generator ranges and N.
std::string generator_digest(const GeneratorSpec& spec);

/// Scores a result file against its reference: RLNE of each result record's
/// signal against the reference clean signal, plus the zero-fill baseline.
struct EvaluationRow {
    int record = 0;
    int order = 0;
    double rlne = 0.0;
    double zero_fill_rlne = 0.0;
};

struct Evaluation {
    std::vector<EvaluationRow> rows;
    double mean_rlne = 0.0;
    double std_rlne = 0.0;
    double mean_zero_fill_rlne = 0.0;
};

/// Throws FormatError when the files do not describe the same records.
Evaluation evaluate(const Dataset& reference, const Dataset& result);
std::string evaluation_csv(const Evaluation& evaluation);
std::string evaluation_json(const Evaluation& evaluation);

/// Sample mean and standard deviation (n - 1 denominator; 0 for one value).
struct MeanStd {
    double mean = 0.0;
    double std = 0.0;
};
MeanStd mean_std(const std::vector<double>& values);

} // namespace hnus
