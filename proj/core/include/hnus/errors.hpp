#pragma once

#include <stdexcept>
#include <string>

namespace hnus {

/// Invalid argument value (out-of-range parameter, empty range, bad rate).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operand shapes or lengths do not agree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input that makes a statistic undefined, e.g. a constant vector for Pearson.
class DegenerateInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure: non-finite values, failed decomposition.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested model order is not supported by the data's signal subspace.
class ModelOrderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or mismatched record file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hnus
