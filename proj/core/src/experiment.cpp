#include "hnus/experiment.hpp"

#include "hnus/errors.hpp"
#include "hnus/random.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

namespace hnus {

namespace {

using json = nlohmann::json;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string format_number(const char* fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, value);
    return buf;
}

json to_json(const GeneratorSpec& g) {
    return json{{"j_range", {g.j_range.lo, g.j_range.hi}},
                {"amplitude_range", {g.amplitude_range.lo, g.amplitude_range.hi}},
                {"frequency_range", {g.frequency_range.lo, g.frequency_range.hi}},
                {"damping_range", {g.damping_range.lo, g.damping_range.hi}},
                {"phase_range", {g.phase_range.lo, g.phase_range.hi}},
                {"n_points", g.n_points},
                {"dt", g.dt}};
}

GeneratorSpec generator_from_json(const json& j) {
    GeneratorSpec g;
    g.j_range = {j.at("j_range").at(0).get<int>(), j.at("j_range").at(1).get<int>()};
    auto interval = [&](const char* key) {
        return Interval{j.at(key).at(0).get<double>(), j.at(key).at(1).get<double>()};
    };
    g.amplitude_range = interval("amplitude_range");
    g.frequency_range = interval("frequency_range");
    g.damping_range = interval("damping_range");
    g.phase_range = interval("phase_range");
    g.n_points = j.at("n_points").get<int>();
    g.dt = j.at("dt").get<double>();
    return g;
}

json to_json(const SolverConfig& c) {
    return json{{"lambda", c.lambda},     {"beta", c.beta},           {"step_tau", c.step_tau},
                {"rank", c.rank_r},       {"max_iters", c.max_iters}, {"tol", c.tol},
                {"n1", c.shape.n1},       {"n2", c.shape.n2}};
}

json to_json(const CsConfig& c) {
    return json{{"decay", c.decay},
                {"min_threshold_ratio", c.min_threshold_ratio},
                {"max_iters", c.max_iters},
                {"tol", c.tol}};
}

json to_json(const PeakSet& set) {
    json arr = json::array();
    for (const auto& p : set.peaks) {
        arr.push_back({{"bin", p.bin}, {"magnitude", p.magnitude}, {"frequency", p.frequency}});
    }
    return arr;
}

json to_json(const RealVector& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        arr.push_back(v[i]);
    }
    return arr;
}

// Runs body(i) for i in [0, count) on `threads` workers.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body body) {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                body(i);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

} // namespace

std::string_view to_string(Method method) noexcept {
    switch (method) {
    case Method::zero_fill: return "zero_fill";
    case Method::cs: return "cs";
    case Method::lrhm: return "lrhm";
    case Method::lrhmf: return "lrhmf";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    for (const Method m : {Method::zero_fill, Method::cs, Method::lrhm, Method::lrhmf}) {
        if (name == to_string(m)) {
            return m;
        }
    }
    throw ParameterError("unknown method '" + std::string(name) + "' (expected zero_fill, cs, lrhm or lrhmf)");
}

double component_sigma(double complex_sigma) noexcept {
    return complex_sigma / std::sqrt(2.0);
}

ReconResult reconstruct(Method method, const ComplexVector& y, const SamplingMask& mask,
                        const MethodConfigs& configs, double noise_sigma, const TimeSignal* truth) {
    switch (method) {
    case Method::zero_fill: {
        ReconResult r;
        r.x_hat = zero_fill(y, mask, truth != nullptr ? truth->dt : 1.0);
        r.converged = true;
        return r;
    }
    case Method::cs: {
        CsConfig cfg = configs.cs;
        cfg.noise_sigma = noise_sigma;
        return cs_ist_reconstruct(y, mask, cfg, truth);
    }
    case Method::lrhm: return lrhm_reconstruct(y, mask, configs.lrhm, truth);
    case Method::lrhmf: return lrhmf_reconstruct(y, mask, configs.lrhmf, truth);
    }
    throw ParameterError("reconstruct: unknown method");
}

MeanStd mean_std(const std::vector<double>& values) {
    MeanStd out;
    if (values.empty()) {
        out.mean = kNan;
        out.std = kNan;
        return out;
    }
    double sum = 0.0;
    for (const double v : values) {
        sum += v;
    }
    out.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (const double v : values) {
            ss += (v - out.mean) * (v - out.mean);
        }
        out.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return out;
}

void validate(const ExperimentSpec& spec) {
    if (spec.methods.empty() || spec.orders.empty() || spec.rates.empty()) {
        throw ParameterError("ExperimentSpec: methods, orders and rates must be non-empty");
    }
    if (spec.trials < 1) {
        throw ParameterError("ExperimentSpec: trials must be >= 1");
    }
    if (!(spec.noise_sigma >= 0.0) || !std::isfinite(spec.noise_sigma)) {
        throw ParameterError("ExperimentSpec: noise_sigma must be finite and non-negative");
    }
    for (const double r : spec.rates) {
        if (!(r > 0.0 && r <= 1.0)) {
            throw ParameterError("ExperimentSpec: rates must lie in (0, 1]");
        }
        sample_count(spec.generator.n_points, r);
    }
    for (const int j : spec.orders) {
        GeneratorSpec g = spec.generator;
        g.j_range = {j, j};
        validate(g);
    }
    validate(spec.configs.lrhmf, spec.generator.n_points);
    SolverConfig lrhm = spec.configs.lrhm;
    lrhm.rank_r = 1;
    validate(lrhm, spec.generator.n_points);
}

TrialData make_trial(const ExperimentSpec& spec, std::size_t order_index, std::size_t rate_index,
                     int trial) {
    const std::uint64_t cell = order_index * spec.rates.size() + rate_index;
    const std::uint64_t seed = derive_seed(spec.base_seed, cell, static_cast<std::uint64_t>(trial));
    GeneratorSpec g = spec.generator;
    g.j_range = {spec.orders[order_index], spec.orders[order_index]};

    TrialData t;
    t.model = random_model(g, derive_seed(seed, 0));
    t.clean = synthesize(t.model, g.n_points);
    t.mask = make_mask({g.n_points, spec.rates[rate_index], spec.pattern, derive_seed(seed, 1)});
    const TimeSignal noisy = add_noise(t.clean, component_sigma(spec.noise_sigma), derive_seed(seed, 2));
    t.measured = undersample(noisy, t.mask);
    return t;
}

std::string_view classify_rlne(double mean_rlne) noexcept {
    if (!(mean_rlne < 0.2)) {
        return "failure";
    }
    return mean_rlne < 0.1 ? "success" : "boundary";
}

int default_thread_count() {
    if (const char* env = std::getenv("HNUS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<int>(std::min<long>(v, 1024));
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

GridResult run_grid(const ExperimentSpec& spec) {
    validate(spec);
    MethodConfigs configs = spec.configs;
    configs.lrhmf.track_nuclear_norm = false;
    configs.lrhm.track_nuclear_norm = false;

    const std::size_t n_rates = spec.rates.size();
    const std::size_t n_cells = spec.orders.size() * n_rates;
    const std::size_t n_methods = spec.methods.size();
    const auto trials = static_cast<std::size_t>(spec.trials);

    GridResult grid;
    grid.cells.resize(n_cells * n_methods);
    for (std::size_t c = 0; c < n_cells; ++c) {
        for (std::size_t m = 0; m < n_methods; ++m) {
            CellResult& cell = grid.cells[c * n_methods + m];
            cell.method = spec.methods[m];
            cell.order = spec.orders[c / n_rates];
            cell.rate = spec.rates[c % n_rates];
            cell.rlne.assign(trials, kNan);
            cell.errors.assign(trials, std::string{});
        }
    }

    // Each task writes only to its own (cell, method, trial) slots.
    parallel_for(n_cells * trials, spec.threads > 0 ? spec.threads : default_thread_count(),
                 [&](std::size_t task) {
                     const std::size_t c = task / trials;
                     const std::size_t t = task % trials;
                     const TrialData data = make_trial(spec, c / n_rates, c % n_rates, static_cast<int>(t));
                     for (std::size_t m = 0; m < n_methods; ++m) {
                         CellResult& cell = grid.cells[c * n_methods + m];
                         try {
                             const ReconResult r = reconstruct(spec.methods[m], data.measured, data.mask,
                                                               configs, spec.noise_sigma, nullptr);
                             const double e = rlne(r.x_hat.samples, data.clean.samples);
                             if (!std::isfinite(e)) {
                                 throw NumericError("non-finite RLNE");
                             }
                             cell.rlne[t] = e;
                         } catch (const std::exception& ex) {
                             cell.errors[t] = ex.what();
                         }
                     }
                 });

    for (auto& cell : grid.cells) {
        std::vector<double> ok;
        for (const double v : cell.rlne) {
            if (std::isfinite(v)) {
                ok.push_back(v);
            }
        }
        cell.failures = static_cast<int>(cell.rlne.size() - ok.size());
        const MeanStd ms = mean_std(ok);
        cell.mean = ms.mean;
        cell.std = ms.std;
    }
    return grid;
}

std::string grid_csv(const GridResult& grid) {
    std::string out = "method,J,rate,trials,mean_rlne,std_rlne\n";
    for (const auto& cell : grid.cells) {
        if (cell.succeeded() == 0) {
            continue;
        }
        out += std::string(to_string(cell.method)) + ',' + std::to_string(cell.order) + ',' +
               format_number("%.6g", cell.rate) + ',' + std::to_string(cell.succeeded()) + ',' +
               format_number("%.8f", cell.mean) + ',' + format_number("%.8f", cell.std) + '\n';
    }
    return out;
}

std::string grid_json(const GridResult& grid, const ExperimentSpec& spec) {
    json methods = json::array();
    for (const Method m : spec.methods) {
        methods.push_back(std::string(to_string(m)));
    }
    json cells = json::array();
    for (const auto& cell : grid.cells) {
        json per_trial = json::array();
        for (const double v : cell.rlne) {
            per_trial.push_back(std::isfinite(v) ? json(v) : json(nullptr));
        }
        json errors = json::array();
        for (std::size_t t = 0; t < cell.errors.size(); ++t) {
            if (!cell.errors[t].empty()) {
                errors.push_back({{"trial", t}, {"error", cell.errors[t]}});
            }
        }
        json entry = {{"method", to_string(cell.method)},
                      {"J", cell.order},
                      {"rate", cell.rate},
                      {"trials", cell.rlne.size()},
                      {"succeeded", cell.succeeded()},
                      {"failures", cell.failures},
                      {"mean_rlne", cell.mean},
                      {"std_rlne", cell.std},
                      {"classification", cell.succeeded() > 0 ? classify_rlne(cell.mean) : "no_data"},
                      {"rlne", per_trial},
                      {"errors", errors}};
        cells.push_back(std::move(entry));
    }
    json report = {{"spec",
                    {{"methods", methods},
                     {"orders", spec.orders},
                     {"rates", spec.rates},
                     {"trials", spec.trials},
                     {"noise_sigma", spec.noise_sigma},
                     {"base_seed", spec.base_seed},
                     {"pattern", to_string(spec.pattern)},
                     {"generator", to_json(spec.generator)},
                     {"lrhmf", to_json(spec.configs.lrhmf)},
                     {"lrhm", to_json(spec.configs.lrhm)},
                     {"cs", to_json(spec.configs.cs)}}},
                   {"thresholds", {{"success_below", 0.1}, {"boundary_below", 0.2}}},
                   {"cells", cells}};
    return report.dump(2) + '\n';
}

CaseInput make_case(const ExponentialModel& model, int n_points, const MaskSpec& mask_spec,
                    double noise_sigma, std::uint64_t noise_seed) {
    CaseInput in;
    in.model = model;
    in.clean = synthesize(model, n_points);
    MaskSpec ms = mask_spec;
    ms.n = n_points;
    in.mask = make_mask(ms);
    in.measured = undersample(add_noise(in.clean, component_sigma(noise_sigma), noise_seed), in.mask);
    return in;
}

CaseReport run_case(const CaseInput& input, Method method, const CaseOptions& options) {
    if (input.clean.size() != input.mask.n || input.measured.size() != input.mask.count()) {
        throw DimensionError("run_case: signal, mask and measurements disagree");
    }
    CaseReport rep;
    rep.method = method;
    rep.result = reconstruct(method, input.measured, input.mask, options.configs, options.noise_sigma,
                             &input.clean);
    rep.rlne = rlne(rep.result.x_hat.samples, input.clean.samples);
    rep.zero_fill_rlne = rlne(zero_fill(input.measured, input.mask).samples, input.clean.samples);

    const HankelShape shape = HankelShape::square_for(input.mask.n);
    rep.reference_diagnostics = hankel_diagnostics(input.clean.samples, shape);
    rep.recon_diagnostics = hankel_diagnostics(rep.result.x_hat.samples, shape);

    rep.reference_spectrum = spectrum(input.clean);
    rep.recon_spectrum = spectrum(rep.result.x_hat);
    const double n = static_cast<double>(input.mask.n);
    rep.peak_floor = std::max(options.peak_floor_ratio * rep.reference_spectrum.magnitude().maxCoeff(),
                              3.0 * options.noise_sigma * std::sqrt(n));
    rep.reference_peaks = detect_peaks(rep.reference_spectrum, rep.peak_floor);
    rep.recon_peaks = detect_peaks(rep.recon_spectrum, rep.peak_floor);
    rep.matching = match_peaks(rep.recon_peaks, rep.reference_peaks, options.d_max);
    rep.peak_correlations =
        peak_correlation(rep.recon_spectrum, rep.reference_spectrum, rep.reference_peaks, options.window_w);
    return rep;
}

std::string case_json(const CaseReport& rep) {
    json history = json::array();
    for (const auto& h : rep.result.history) {
        history.push_back({{"factor_residual", h.factor_residual},
                           {"nuclear_norm", h.nuclear_norm},
                           {"rlne", h.rlne},
                           {"relative_change", h.relative_change}});
    }
    json pairs = json::array();
    for (const auto& p : rep.matching.pairs) {
        pairs.push_back({{"reference", p.truth}, {"recon", p.recon}, {"distance", p.distance}});
    }
    json report = {{"method", to_string(rep.method)},
                   {"rlne", rep.rlne},
                   {"zero_fill_rlne", rep.zero_fill_rlne},
                   {"iterations", rep.result.iterations},
                   {"converged", rep.result.converged},
                   {"history", history},
                   {"reference_singular_values", to_json(rep.reference_diagnostics.singular_values)},
                   {"recon_singular_values", to_json(rep.recon_diagnostics.singular_values)},
                   {"reference_nuclear_norm", rep.reference_diagnostics.nuclear_norm},
                   {"recon_nuclear_norm", rep.recon_diagnostics.nuclear_norm},
                   {"reference_magnitude", to_json(rep.reference_spectrum.magnitude())},
                   {"recon_magnitude", to_json(rep.recon_spectrum.magnitude())},
                   {"peak_floor", rep.peak_floor},
                   {"reference_peaks", to_json(rep.reference_peaks)},
                   {"recon_peaks", to_json(rep.recon_peaks)},
                   {"matches", pairs},
                   {"missing", rep.matching.missing},
                   {"peak_correlations", rep.peak_correlations}};
    return report.dump(2) + '\n';
}

RecordSeeds record_seeds(std::uint64_t base_seed, int record) {
    const auto q = static_cast<std::uint64_t>(record);
    return {derive_seed(base_seed, q, 0), derive_seed(base_seed, q, 1), derive_seed(base_seed, q, 2)};
}

DatasetRecord make_record(const DatasetSpec& spec, const RecordSeeds& seeds) {
    const int n = spec.generator.n_points;
    DatasetRecord r;
    r.model = random_model(spec.generator, seeds.model);
    const TimeSignal clean = synthesize(r.model, n);
    const SamplingMask mask = make_mask({n, spec.rate, spec.pattern, seeds.mask});
    r.mask = mask.indices;
    r.clean = clean.samples;
    r.measured = undersample(add_noise(clean, component_sigma(spec.noise_sigma), seeds.noise), mask);
    return r;
}

int train_count(int count, double fraction) {
    if (count < 1 || !(fraction >= 0.0 && fraction <= 1.0)) {
        throw ParameterError("train_count: count must be >= 1 and fraction in [0, 1]");
    }
    // The small offset keeps products like 0.9 * 10 = 9.000000000000002 - eps exact.
    return static_cast<int>(std::floor(fraction * count + 1e-9));
}

std::string generator_digest(const GeneratorSpec& g) {
    std::string text;
    auto add = [&](const char* key, double v) { text += std::string(key) + '=' + format_number("%.17g", v) + ';'; };
    add("j_lo", g.j_range.lo);
    add("j_hi", g.j_range.hi);
    add("a_lo", g.amplitude_range.lo);
    add("a_hi", g.amplitude_range.hi);
    add("f_lo", g.frequency_range.lo);
    add("f_hi", g.frequency_range.hi);
    add("tau_lo", g.damping_range.lo);
    add("tau_hi", g.damping_range.hi);
    add("phi_lo", g.phase_range.lo);
    add("phi_hi", g.phase_range.hi);
    add("n", g.n_points);
    add("dt", g.dt);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string manifest_json(const DatasetManifest& m) {
    json records = json::array();
    for (std::size_t q = 0; q < m.seeds.size(); ++q) {
        records.push_back({{"index", q},
                           {"split", static_cast<int>(q) < m.train_count ? "train" : "validation"},
                           {"model_seed", m.seeds[q].model},
                           {"mask_seed", m.seeds[q].mask},
                           {"noise_seed", m.seeds[q].noise}});
    }
    const int n = m.spec.generator.n_points;
    json report = {{"format_version", kDatasetFormatVersion},
                   {"n_points", n},
                   {"n_measured", sample_count(n, m.spec.rate)},
                   {"count", m.count},
                   {"dt", m.spec.generator.dt},
                   {"generator", to_json(m.spec.generator)},
                   {"generator_digest", m.generator_digest},
                   {"noise_sigma", m.spec.noise_sigma},
                   {"noise_convention", "complex_std"},
                   {"rate", m.spec.rate},
                   {"pattern", to_string(m.spec.pattern)},
                   {"base_seed", m.spec.base_seed},
                   {"train_fraction", m.spec.train_fraction},
                   {"train_count", m.train_count},
                   {"validation_count", m.validation_count},
                   {"files", {{"train", "train.bin"}, {"validation", "validation.bin"}}},
                   {"records", records}};
    return report.dump(2) + '\n';
}

DatasetManifest parse_manifest(std::string_view text) {
    try {
        const json j = json::parse(text);
        if (j.at("format_version").get<std::int64_t>() != kDatasetFormatVersion) {
            throw FormatError("manifest: unsupported format version");
        }
        DatasetManifest m;
        m.count = j.at("count").get<int>();
        m.train_count = j.at("train_count").get<int>();
        m.validation_count = j.at("validation_count").get<int>();
        m.generator_digest = j.at("generator_digest").get<std::string>();
        m.spec.generator = generator_from_json(j.at("generator"));
        m.spec.noise_sigma = j.at("noise_sigma").get<double>();
        m.spec.rate = j.at("rate").get<double>();
        m.spec.pattern = parse_pattern(j.at("pattern").get<std::string>());
        m.spec.count = m.count;
        m.spec.train_fraction = j.at("train_fraction").get<double>();
        m.spec.base_seed = j.at("base_seed").get<std::uint64_t>();
        for (const auto& r : j.at("records")) {
            m.seeds.push_back({r.at("model_seed").get<std::uint64_t>(), r.at("mask_seed").get<std::uint64_t>(),
                               r.at("noise_seed").get<std::uint64_t>()});
        }
        if (m.count < 1 || static_cast<int>(m.seeds.size()) != m.count ||
            m.train_count + m.validation_count != m.count) {
            throw FormatError("manifest: record counts are inconsistent");
        }
        if (generator_digest(m.spec.generator) != m.generator_digest) {
            throw FormatError("manifest: generator digest does not match the generator ranges");
        }
        return m;
    } catch (const json::exception& e) {
        throw FormatError(std::string("manifest: ") + e.what());
    } catch (const ParameterError& e) {
        throw FormatError(std::string("manifest: ") + e.what());
    }
}

DatasetManifest make_dataset(const DatasetSpec& spec, const std::filesystem::path& dir) {
    if (spec.count < 1) {
        throw ParameterError("make_dataset: count must be >= 1");
    }
    validate(spec.generator);
    if (!(spec.noise_sigma >= 0.0)) {
        throw ParameterError("make_dataset: noise_sigma must be non-negative");
    }
    const int n = spec.generator.n_points;
    sample_count(n, spec.rate);

    DatasetManifest m;
    m.spec = spec;
    m.count = spec.count;
    m.train_count = train_count(spec.count, spec.train_fraction);
    m.validation_count = spec.count - m.train_count;
    m.generator_digest = generator_digest(spec.generator);

    std::vector<DatasetRecord> train;
    std::vector<DatasetRecord> validation;
    for (int q = 0; q < spec.count; ++q) {
        m.seeds.push_back(record_seeds(spec.base_seed, q));
        (q < m.train_count ? train : validation).push_back(make_record(spec, m.seeds.back()));
    }

    std::filesystem::create_directories(dir);
    auto write_split = [&](std::vector<DatasetRecord>& records, const char* name) {
        const std::filesystem::path path = dir / name;
        if (records.empty()) {
            std::filesystem::remove(path);
            return;
        }
        Dataset d;
        d.header = header_for(records, spec.generator.dt);
        d.records = std::move(records);
        write_dataset(path, d);
    };
    write_split(train, "train.bin");
    write_split(validation, "validation.bin");

    std::ofstream out(dir / "manifest.json", std::ios::trunc);
    out << manifest_json(m);
    if (!out) {
        throw FormatError("make_dataset: cannot write manifest.json");
    }
    return m;
}

Evaluation evaluate(const Dataset& reference, const Dataset& result) {
    if (reference.header.n_points != result.header.n_points ||
        reference.records.size() != result.records.size()) {
        throw FormatError("evaluate: reference and result describe different record sets");
    }
    Evaluation ev;
    std::vector<double> errs;
    std::vector<double> zf;
    for (std::size_t q = 0; q < reference.records.size(); ++q) {
        const DatasetRecord& ref = reference.records[q];
        const DatasetRecord& res = result.records[q];
        if (ref.mask != res.mask) {
            throw FormatError("evaluate: sampling masks differ at record " + std::to_string(q));
        }
        const SamplingMask mask = ref.sampling_mask(reference.header.n_points);
        EvaluationRow row;
        row.record = static_cast<int>(q);
        row.order = static_cast<int>(ref.model.order());
        row.rlne = rlne(res.clean, ref.clean);
        row.zero_fill_rlne = rlne(zero_fill(ref.measured, mask).samples, ref.clean);
        errs.push_back(row.rlne);
        zf.push_back(row.zero_fill_rlne);
        ev.rows.push_back(row);
    }
    const MeanStd ms = mean_std(errs);
    ev.mean_rlne = ms.mean;
    ev.std_rlne = ms.std;
    ev.mean_zero_fill_rlne = mean_std(zf).mean;
    return ev;
}

std::string evaluation_csv(const Evaluation& ev) {
    std::string out = "record,J,rlne,zero_fill_rlne\n";
    for (const auto& r : ev.rows) {
        out += std::to_string(r.record) + ',' + std::to_string(r.order) + ',' + format_number("%.8f", r.rlne) +
               ',' + format_number("%.8f", r.zero_fill_rlne) + '\n';
    }
    return out;
}

std::string evaluation_json(const Evaluation& ev) {
    json rows = json::array();
    for (const auto& r : ev.rows) {
        rows.push_back({{"record", r.record}, {"J", r.order}, {"rlne", r.rlne}, {"zero_fill_rlne", r.zero_fill_rlne}});
    }
    json report = {{"count", ev.rows.size()},
                   {"mean_rlne", ev.mean_rlne},
                   {"std_rlne", ev.std_rlne},
                   {"mean_zero_fill_rlne", ev.mean_zero_fill_rlne},
                   {"records", rows}};
    return report.dump(2) + '\n';
}

} // namespace hnus
