#include "hnus/record_io.hpp"

#include "hnus/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

namespace hnus {

namespace {

static_assert(std::numeric_limits<double>::is_iec559, "float64 storage requires IEEE 754 doubles");

template <typename T>
void put(std::ostream& out, T value) {
    std::array<unsigned char, sizeof(T)> bytes{};
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

template <typename T>
T get(std::istream& in) {
    std::array<unsigned char, sizeof(T)> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()))) {
        throw FormatError("dataset: unexpected end of data");
    }
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

void put_complex(std::ostream& out, const ComplexVector& v) {
    for (const auto& z : v) {
        put(out, z.real());
        put(out, z.imag());
    }
}

ComplexVector get_complex(std::istream& in, std::int64_t count) {
    ComplexVector v(count);
    for (std::int64_t i = 0; i < count; ++i) {
        const double re = get<double>(in);
        const double im = get<double>(in);
        v[i] = Complex(re, im);
    }
    return v;
}

// Bounds that keep a corrupt header from triggering huge allocations.
constexpr std::int64_t kMaxPoints = std::int64_t{1} << 24;
constexpr std::int64_t kMaxOrder = 4096;

void check_header(const DatasetHeader& h) {
    if (h.version != kDatasetFormatVersion) {
        throw FormatError("dataset: unsupported format version " + std::to_string(h.version));
    }
    if (h.n_points < 1 || h.n_points > kMaxPoints) {
        throw FormatError("dataset: invalid N");
    }
    if (h.n_measured < 1 || h.n_measured > h.n_points) {
        throw FormatError("dataset: M must lie in [1, N]");
    }
    if (h.count < 0) {
        throw FormatError("dataset: negative record count");
    }
    if (!(h.dt > 0.0) || !std::isfinite(h.dt)) {
        throw FormatError("dataset: dt must be positive and finite");
    }
}

void check_mask(const std::vector<int>& mask, std::int64_t n) {
    int prev = 0;
    for (const int idx : mask) {
        if (idx <= prev || idx > n) {
            throw FormatError("dataset: mask indices must be strictly increasing in [1, N]");
        }
        prev = idx;
    }
}

} // namespace

SamplingMask DatasetRecord::sampling_mask(std::int64_t n_points, SamplingPattern pattern) const {
    SamplingMask m;
    m.n = static_cast<int>(n_points);
    m.indices = mask;
    m.pattern = pattern;
    validate(m);
    return m;
}

DatasetHeader header_for(const std::vector<DatasetRecord>& records, double dt) {
    if (records.empty()) {
        throw ParameterError("header_for: no records");
    }
    DatasetHeader h;
    h.n_points = records.front().clean.size();
    h.n_measured = static_cast<std::int64_t>(records.front().mask.size());
    h.count = static_cast<std::int64_t>(records.size());
    h.dt = dt;
    return h;
}

void write_dataset(std::ostream& out, const Dataset& dataset) {
    const DatasetHeader& h = dataset.header;
    check_header(h);
    if (h.count != static_cast<std::int64_t>(dataset.records.size())) {
        throw FormatError("dataset: header count differs from the number of records");
    }
    for (const auto& r : dataset.records) {
        if (r.clean.size() != h.n_points || static_cast<std::int64_t>(r.mask.size()) != h.n_measured ||
            r.measured.size() != h.n_measured) {
            throw FormatError("dataset: record dimensions differ from the header");
        }
        check_mask(r.mask, h.n_points);
    }

    put(out, h.version);
    put(out, h.n_points);
    put(out, h.n_measured);
    put(out, h.count);
    put(out, h.dt);
    for (const auto& r : dataset.records) {
        put(out, static_cast<std::int64_t>(r.model.order()));
        for (const auto& c : r.model.components) {
            put(out, c.amplitude);
            put(out, c.phase);
            put(out, c.damping);
            put(out, c.frequency);
        }
        for (const int idx : r.mask) {
            put(out, static_cast<std::uint32_t>(idx));
        }
        put_complex(out, r.clean);
        put_complex(out, r.measured);
    }
    if (!out) {
        throw FormatError("dataset: write failed");
    }
}

void write_dataset(const std::filesystem::path& path, const Dataset& dataset) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError("dataset: cannot open " + path.string() + " for writing");
    }
    write_dataset(out, dataset);
}

Dataset read_dataset(std::istream& in) {
    Dataset d;
    DatasetHeader& h = d.header;
    h.version = get<std::int64_t>(in);
    h.n_points = get<std::int64_t>(in);
    h.n_measured = get<std::int64_t>(in);
    h.count = get<std::int64_t>(in);
    h.dt = get<double>(in);
    check_header(h);

    for (std::int64_t q = 0; q < h.count; ++q) {
        DatasetRecord r;
        const auto order = get<std::int64_t>(in);
        if (order < 0 || order > kMaxOrder) {
            throw FormatError("dataset: invalid model order in record " + std::to_string(q));
        }
        std::vector<ExponentialComponent> components(static_cast<std::size_t>(order));
        for (auto& c : components) {
            c.amplitude = get<double>(in);
            c.phase = get<double>(in);
            c.damping = get<double>(in);
            c.frequency = get<double>(in);
        }
        // Result files may carry estimated models, so the order is kept as stored.
        r.model.components = std::move(components);
        r.model.dt = h.dt;
        r.mask.resize(static_cast<std::size_t>(h.n_measured));
        for (auto& idx : r.mask) {
            const auto v = get<std::uint32_t>(in);
            if (v > static_cast<std::uint32_t>(std::numeric_limits<int>::max())) {
                throw FormatError("dataset: mask index out of range");
            }
            idx = static_cast<int>(v);
        }
        check_mask(r.mask, h.n_points);
        r.clean = get_complex(in, h.n_points);
        r.measured = get_complex(in, h.n_measured);
        d.records.push_back(std::move(r));
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw FormatError("dataset: trailing bytes after the last record");
    }
    return d;
}

Dataset read_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("dataset: cannot open " + path.string());
    }
    return read_dataset(in);
}

} // namespace hnus
