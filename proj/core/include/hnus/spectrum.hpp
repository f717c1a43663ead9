#pragma once

#include "hnus/types.hpp"

#include <vector>

namespace hnus {

/// Unnormalized forward DFT; bin k (zero-based) is frequency k / N.
struct Spectrum {
    ComplexVector bins;

    [[nodiscard]] Eigen::Index size() const noexcept { return bins.size(); }
    [[nodiscard]] RealVector magnitude() const { return bins.cwiseAbs(); }
};

Spectrum spectrum(const TimeSignal& x);
Spectrum spectrum(const ComplexVector& x);
/// Inverse of `spectrum` (scaled by 1 / N).
ComplexVector inverse_spectrum(const ComplexVector& bins);

struct Peak {
    int bin = 0;             ///< zero-based
    double magnitude = 0.0;
    double frequency = 0.0;  ///< parabolic-interpolated, in [0, 1)

    friend bool operator==(const Peak&, const Peak&) = default;
};

/// Sorted by bin, bins unique.
struct PeakSet {
    std::vector<Peak> peaks;

    [[nodiscard]] std::size_t size() const noexcept { return peaks.size(); }
};

/// Local maxima of the magnitude spectrum (circular neighbours) strictly
/// above `floor`, refined by a three-point parabola.
PeakSet detect_peaks(const Spectrum& s, double floor);

struct PeakPair {
    std::size_t truth = 0;  ///< index into the truth PeakSet
    std::size_t recon = 0;  ///< index into the reconstruction PeakSet
    double distance = 0.0;  ///< in bins
};

struct PeakMatching {
    std::vector<PeakPair> pairs;     ///< ordered by truth index
    std::vector<std::size_t> missing;  ///< truth peaks without a partner within d_max
};

/// Greedy nearest-bin matching: candidate pairs within d_max are accepted in
/// order of increasing distance (ties by truth then recon index).
PeakMatching match_peaks(const PeakSet& recon, const PeakSet& truth, double d_max = 3.0);

/// Pearson correlation of the magnitude spectra over [bin - w, bin + w]
/// (clamped to the spectrum) around each truth peak. A window where the
/// reconstruction is flat scores 0.
std::vector<double> peak_correlation(const Spectrum& recon, const Spectrum& truth,
                                     const PeakSet& truth_peaks, int window_w = 10);

} // namespace hnus
