// hnus: generate, undersample, reconstruct and score exponential signals.
//
// Exit status: 0 on success, 2 on a usage error, 1 on a runtime failure.

#include "hnus/errors.hpp"
#include "hnus/experiment.hpp"
#include "hnus/random.hpp"
#include "hnus/scoring.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace hnus;

constexpr int kUsageError = 2;
constexpr int kRuntimeError = 1;

struct SolverFlags {
    double lambda = SolverConfig{}.lambda;
    double beta = SolverConfig{}.beta;
    int rank = SolverConfig{}.rank_r;
    int iters = SolverConfig{}.max_iters;
    double tol = SolverConfig{}.tol;

    void attach(CLI::App* cmd) {
        cmd->add_option("--lambda", lambda, "data-consistency weight")->check(CLI::PositiveNumber);
        cmd->add_option("--beta", beta, "ADMM penalty")->check(CLI::PositiveNumber);
        cmd->add_option("--rank", rank, "factorization rank (lrhmf)")->check(CLI::PositiveNumber);
        cmd->add_option("--iters", iters, "iteration cap")->check(CLI::PositiveNumber);
        cmd->add_option("--tol", tol, "relative-change stopping tolerance")->check(CLI::PositiveNumber);
    }

    [[nodiscard]] MethodConfigs configs() const {
        MethodConfigs c;
        for (SolverConfig* s : {&c.lrhmf, &c.lrhm}) {
            s->lambda = lambda;
            s->beta = beta;
            s->rank_r = rank;
            s->max_iters = iters;
            s->tol = tol;
            s->track_nuclear_norm = false;
        }
        return c;
    }
};

const std::map<std::string, SamplingPattern> kPatterns{{"poisson_gap", SamplingPattern::poisson_gap},
                                                       {"uniform_random", SamplingPattern::uniform_random},
                                                       {"truncation", SamplingPattern::truncation}};
const std::map<std::string, Method> kMethods{{"zero_fill", Method::zero_fill},
                                             {"cs", Method::cs},
                                             {"lrhm", Method::lrhm},
                                             {"lrhmf", Method::lrhmf}};

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::trunc);
    f << text;
    if (!f) {
        throw FormatError("cannot write " + out);
    }
}

Dataset single_record(const ExponentialModel& model, int n_points, double sigma, std::uint64_t seed) {
    const TimeSignal clean = synthesize(model, n_points);
    SamplingMask full;
    full.n = n_points;
    for (int i = 1; i <= n_points; ++i) {
        full.indices.push_back(i);
    }
    DatasetRecord r;
    r.model = model;
    r.mask = full.indices;
    r.clean = clean.samples;
    r.measured = undersample(add_noise(clean, component_sigma(sigma), seed), full);
    Dataset d;
    d.records.push_back(std::move(r));
    d.header = header_for(d.records, model.dt);
    return d;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Low-rank Hankel reconstruction of non-uniformly sampled exponential signals"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
    double sigma = 0.0;
    double rate = 0.25;
    std::string pattern = "poisson_gap";
    std::string method = "lrhmf";
    int trials = 50;
    SolverFlags solver;
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "report format")->check(CLI::IsMember({"csv", "json"}));
    };

    // generate
    auto* gen = app.add_subcommand("generate", "write one fully sampled signal");
    std::string preset;
    int order = 0;
    int points = 255;
    gen->add_option("--preset", preset, "reference model")->check(CLI::IsMember({"weak", "five", "four"}));
    gen->add_option("--order", order, "random model with this many components")->check(CLI::Range(1, 64));
    gen->add_option("--points", points, "signal length")->check(CLI::Range(2, 1 << 20));
    gen->add_option("--seed", seed);
    gen->add_option("--sigma", sigma, "complex noise std")->check(CLI::NonNegativeNumber);
    gen->add_option("--out", out, "dataset file")->required();

    // sample
    auto* smp = app.add_subcommand("sample", "redraw masks and noisy measurements for every record");
    std::string input;
    smp->add_option("--in", input, "dataset file")->required()->check(CLI::ExistingFile);
    smp->add_option("--rate", rate)->check(CLI::Range(0.0, 1.0));
    smp->add_option("--pattern", pattern)->check(CLI::IsMember(kPatterns));
    smp->add_option("--seed", seed);
    smp->add_option("--sigma", sigma, "complex noise std")->check(CLI::NonNegativeNumber);
    smp->add_option("--out", out, "dataset file")->required();

    // reconstruct
    auto* rec = app.add_subcommand("reconstruct", "reconstruct every record of a dataset file");
    std::string report;
    int record = 0;
    rec->add_option("--in", input, "dataset file")->required()->check(CLI::ExistingFile);
    rec->add_option("--method", method)->check(CLI::IsMember(kMethods));
    rec->add_option("--sigma", sigma, "complex noise std of the measurements")->check(CLI::NonNegativeNumber);
    rec->add_option("--out", out, "result file (same format, clean field holds the estimate)")->required();
    rec->add_option("--report", report, "JSON diagnostics for one record");
    rec->add_option("--record", record, "record index for --report")->check(CLI::NonNegativeNumber);
    solver.attach(rec);

    // evaluate
    auto* ev = app.add_subcommand("evaluate", "score a result file against its reference");
    std::string reference;
    ev->add_option("--reference", reference, "dataset with the clean signals")->required()->check(CLI::ExistingFile);
    ev->add_option("--in", input, "result file")->required()->check(CLI::ExistingFile);
    ev->add_option("--out", out, "report path (default stdout)");
    add_format(ev);

    // grid
    auto* grid = app.add_subcommand("grid", "Monte-Carlo RLNE grid");
    std::vector<std::string> methods{"lrhmf"};
    std::vector<int> orders{1};
    std::vector<double> rates{0.25};
    double grid_sigma = 0.05;
    int threads = 0;
    std::string json_out;
    grid->add_option("--method", methods, "methods")->delimiter(',')->check(CLI::IsMember(kMethods));
    grid->add_option("--orders", orders, "model orders J")->delimiter(',')->check(CLI::Range(1, 64));
    grid->add_option("--rate", rates, "sampling rates")->delimiter(',')->check(CLI::Range(0.0, 1.0));
    grid->add_option("--trials", trials)->check(CLI::PositiveNumber);
    grid->add_option("--seed", seed);
    grid->add_option("--sigma", grid_sigma, "complex noise std")->check(CLI::NonNegativeNumber);
    grid->add_option("--pattern", pattern)->check(CLI::IsMember(kPatterns));
    grid->add_option("--threads", threads, "worker threads (default HNUS_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
    grid->add_option("--out", out, "report path (default stdout)");
    grid->add_option("--json", json_out, "also write the JSON report here");
    add_format(grid);
    solver.attach(grid);

    // dataset
    auto* ds = app.add_subcommand("dataset", "training/validation dataset with manifest");
    DatasetSpec dspec;
    ds->add_option("--count", dspec.count)->check(CLI::PositiveNumber);
    ds->add_option("--split", dspec.train_fraction, "training fraction")->check(CLI::Range(0.0, 1.0));
    ds->add_option("--rate", dspec.rate)->check(CLI::Range(0.0, 1.0));
    ds->add_option("--pattern", pattern)->check(CLI::IsMember(kPatterns));
    ds->add_option("--sigma", dspec.noise_sigma, "complex noise std")->check(CLI::NonNegativeNumber);
    ds->add_option("--seed", dspec.base_seed);
    ds->add_option("--j-min", dspec.generator.j_range.lo)->check(CLI::Range(1, 64));
    ds->add_option("--j-max", dspec.generator.j_range.hi)->check(CLI::Range(1, 64));
    ds->add_option("--points", dspec.generator.n_points)->check(CLI::Range(2, 1 << 20));
    ds->add_option("--out", out, "output directory")->required();

    // score
    auto* sc = app.add_subcommand("score", "rank methods by ESPRIT parameter accuracy");
    std::vector<std::string> results;
    sc->add_option("--reference", reference, "dataset with the true models")->required()->check(CLI::ExistingFile);
    sc->add_option("--result", results, "name=path, 2 to 4 times")->required();
    sc->add_option("--out", out, "report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*gen) {
            if (preset.empty() == (order == 0)) {
                throw ParameterError("generate: give exactly one of --preset or --order");
            }
            ExponentialModel model;
            if (preset == "weak") {
                model = presets::weak_peak_model();
            } else if (preset == "five") {
                model = presets::five_peak_model();
            } else if (preset == "four") {
                model = presets::four_peak_model();
            } else {
                GeneratorSpec g;
                g.j_range = {order, order};
                g.n_points = points;
                model = random_model(g, derive_seed(seed, 0));
            }
            write_dataset(out, single_record(model, points, sigma, derive_seed(seed, 1)));
        } else if (*smp) {
            Dataset d = read_dataset(input);
            const int n = static_cast<int>(d.header.n_points);
            for (std::size_t q = 0; q < d.records.size(); ++q) {
                const RecordSeeds s = record_seeds(seed, static_cast<int>(q));
                const SamplingMask mask = make_mask({n, rate, kPatterns.at(pattern), s.mask});
                DatasetRecord& r = d.records[q];
                r.mask = mask.indices;
                r.measured = undersample(add_noise(TimeSignal{r.clean, d.header.dt}, component_sigma(sigma), s.noise), mask);
            }
            d.header = header_for(d.records, d.header.dt);
            write_dataset(out, d);
        } else if (*rec) {
            const Dataset d = read_dataset(input);
            const Method m = kMethods.at(method);
            const MethodConfigs configs = solver.configs();
            Dataset result = d;
            for (auto& r : result.records) {
                const SamplingMask mask = r.sampling_mask(d.header.n_points);
                r.clean = reconstruct(m, r.measured, mask, configs, sigma).x_hat.samples;
            }
            write_dataset(out, result);
            if (!report.empty()) {
                if (record >= static_cast<int>(d.records.size())) {
                    throw ParameterError("reconstruct: --record is out of range");
                }
                const DatasetRecord& r = d.records[static_cast<std::size_t>(record)];
                CaseInput in{r.model, TimeSignal{r.clean, d.header.dt}, r.sampling_mask(d.header.n_points),
                             r.measured};
                CaseOptions opts;
                opts.configs = configs;
                opts.configs.lrhmf.track_nuclear_norm = true;
                opts.configs.lrhm.track_nuclear_norm = true;
                opts.noise_sigma = sigma;
                emit(case_json(run_case(in, m, opts)), report);
            }
        } else if (*ev) {
            const Evaluation e = evaluate(read_dataset(reference), read_dataset(input));
            emit(format == "csv" ? evaluation_csv(e) : evaluation_json(e), out);
        } else if (*grid) {
            ExperimentSpec spec;
            spec.methods.clear();
            for (const auto& name : methods) {
                spec.methods.push_back(kMethods.at(name));
            }
            spec.orders = orders;
            spec.rates = rates;
            spec.trials = trials;
            spec.noise_sigma = grid_sigma;
            spec.base_seed = seed;
            spec.pattern = kPatterns.at(pattern);
            spec.configs = solver.configs();
            spec.threads = threads;
            const GridResult g = run_grid(spec);
            emit(format == "csv" ? grid_csv(g) : grid_json(g, spec), out);
            if (!json_out.empty()) {
                emit(grid_json(g, spec), json_out);
            }
        } else if (*ds) {
            dspec.pattern = kPatterns.at(pattern);
            const DatasetManifest m = make_dataset(dspec, out);
            std::cout << "wrote " << m.train_count << " training and " << m.validation_count
                      << " validation records to " << out << '\n';
        } else if (*sc) {
            const Dataset ref = read_dataset(reference);
            std::vector<MethodErrors> errors;
            for (const auto& spec : results) {
                const auto eq = spec.find('=');
                if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
                    throw ParameterError("score: --result expects name=path, got '" + spec + "'");
                }
                const Dataset res = read_dataset(spec.substr(eq + 1));
                if (res.records.size() != ref.records.size() || res.header.n_points != ref.header.n_points) {
                    throw FormatError("score: " + spec + " does not match the reference records");
                }
                MethodErrors me{spec.substr(0, eq), {}};
                for (std::size_t q = 0; q < ref.records.size(); ++q) {
                    const auto& truth = ref.records[q].model;
                    ComponentErrors e;
                    try {
                        const auto est = esprit(TimeSignal{res.records[q].clean, ref.header.dt},
                                                static_cast<int>(truth.order()));
                        e = parameter_errors(est, truth).mean();
                    } catch (const ModelOrderError&) {
                        e = {NAN, NAN, NAN, NAN};
                    }
                    me.trials.push_back(e);
                }
                errors.push_back(std::move(me));
            }
            emit(scores_csv(score_methods(errors)), out);
        }
    } catch (const ParameterError& e) {
        std::cerr << "hnus: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "hnus: " << e.what() << '\n';
        return kRuntimeError;
    }
    return 0;
}
