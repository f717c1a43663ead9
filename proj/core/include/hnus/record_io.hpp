#pragma once

#include "hnus/sampling.hpp"
#include "hnus/signal.hpp"
#include "hnus/types.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace hnus {

inline constexpr std::int64_t kDatasetFormatVersion = 1;

/// File header. Every record in a file shares N, M and dt.
struct DatasetHeader {
    std::int64_t version = kDatasetFormatVersion;
    std::int64_t n_points = 0;    ///< N
    std::int64_t n_measured = 0;  ///< M
    std::int64_t count = 0;       ///< Q
    double dt = 1.0;

    friend bool operator==(const DatasetHeader&, const DatasetHeader&) = default;
};

/// One (model, Omega, x, y) record. In result files `clean` holds a
/// reconstruction instead of the reference signal.
struct DatasetRecord {
    ExponentialModel model;
    std::vector<int> mask;  ///< 1-based, strictly increasing
    ComplexVector clean;    ///< length N
    ComplexVector measured; ///< length M

    [[nodiscard]] SamplingMask sampling_mask(std::int64_t n_points,
                                             SamplingPattern pattern = SamplingPattern::poisson_gap) const;
};

struct Dataset {
    DatasetHeader header;
    std::vector<DatasetRecord> records;
};

/// Layout, all little-endian:
///   header   version, N, M, Q as int64, dt as float64
///   record   J as int64, J x (A, phi, tau, f) float64,
///            M x uint32 mask, N x (re, im) float64 clean, M x (re, im) float64 y
/// Throws FormatError when records disagree with the header.
void write_dataset(std::ostream& out, const Dataset& dataset);
void write_dataset(const std::filesystem::path& path, const Dataset& dataset);

/// Throws FormatError on truncation, unknown versions or invalid content.
Dataset read_dataset(std::istream& in);
Dataset read_dataset(const std::filesystem::path& path);

/// Header built from the first record; throws if `records` is empty.
DatasetHeader header_for(const std::vector<DatasetRecord>& records, double dt);

} // namespace hnus
