#include "hnus/spectrum.hpp"

#include "hnus/errors.hpp"
#include "hnus/metrics.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <tuple>

namespace hnus {

Spectrum spectrum(const ComplexVector& x) {
    if (x.size() < 2) {
        throw ParameterError("spectrum: at least two samples required");
    }
    Eigen::FFT<double> fft;
    Spectrum out;
    out.bins.resize(x.size());
    fft.fwd(out.bins, x);
    return out;
}

Spectrum spectrum(const TimeSignal& x) {
    return spectrum(x.samples);
}

ComplexVector inverse_spectrum(const ComplexVector& bins) {
    Eigen::FFT<double> fft;
    ComplexVector out(bins.size());
    fft.inv(out, bins);
    return out;
}

PeakSet detect_peaks(const Spectrum& s, double floor) {
    PeakSet out;
    const Eigen::Index n = s.size();
    if (n < 3) {
        return out;
    }
    const RealVector mag = s.magnitude();
    for (Eigen::Index k = 0; k < n; ++k) {
        const double left = mag[(k + n - 1) % n];
        const double mid = mag[k];
        const double right = mag[(k + 1) % n];
        if (!(mid > floor) || !(mid > left) || !(mid >= right)) {
            continue;
        }
        const double curvature = left - 2.0 * mid + right;
        const double offset = curvature != 0.0 ? 0.5 * (left - right) / curvature : 0.0;
        double freq = (static_cast<double>(k) + offset) / static_cast<double>(n);
        freq -= std::floor(freq);
        if (freq >= 1.0) {
            freq = 0.0;
        }
        out.peaks.push_back(Peak{static_cast<int>(k), mid, freq});
    }
    return out;
}

PeakMatching match_peaks(const PeakSet& recon, const PeakSet& truth, double d_max) {
    std::vector<std::tuple<double, std::size_t, std::size_t>> candidates;
    for (std::size_t t = 0; t < truth.size(); ++t) {
        for (std::size_t r = 0; r < recon.size(); ++r) {
            const double d = std::abs(recon.peaks[r].bin - truth.peaks[t].bin);
            if (d <= d_max) {
                candidates.emplace_back(d, t, r);
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<bool> truth_used(truth.size(), false);
    std::vector<bool> recon_used(recon.size(), false);
    PeakMatching out;
    for (const auto& [d, t, r] : candidates) {
        if (truth_used[t] || recon_used[r]) {
            continue;
        }
        truth_used[t] = true;
        recon_used[r] = true;
        out.pairs.push_back(PeakPair{t, r, d});
    }
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const PeakPair& a, const PeakPair& b) { return a.truth < b.truth; });
    for (std::size_t t = 0; t < truth.size(); ++t) {
        if (!truth_used[t]) {
            out.missing.push_back(t);
        }
    }
    return out;
}

std::vector<double> peak_correlation(const Spectrum& recon, const Spectrum& truth,
                                     const PeakSet& truth_peaks, int window_w) {
    if (recon.size() != truth.size()) {
        throw DimensionError("peak_correlation: spectra lengths differ");
    }
    if (window_w < 1) {
        throw ParameterError("peak_correlation: window must be >= 1");
    }
    const RealVector rm = recon.magnitude();
    const RealVector tm = truth.magnitude();
    const auto n = static_cast<int>(truth.size());
    std::vector<double> out;
    out.reserve(truth_peaks.size());
    for (const auto& peak : truth_peaks.peaks) {
        const int lo = std::max(0, peak.bin - window_w);
        const int hi = std::min(n - 1, peak.bin + window_w);
        const int len = hi - lo + 1;
        try {
            out.push_back(pearson(rm.segment(lo, len), tm.segment(lo, len)));
        } catch (const DegenerateInputError&) {
            out.push_back(0.0);
        }
    }
    return out;
}

} // namespace hnus
