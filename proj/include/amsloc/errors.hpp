#pragma once

#include <stdexcept>
#include <string>

namespace amsloc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad caller-supplied value (out-of-range azimuth, wrong channel count, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// Malformed input file (bad RIFF header, truncated data chunk, ...).
struct FormatError : Error {
    using Error::Error;
};

// Well-formed but unsupported encoding (24-bit PCM, >8 channels, ...).
struct UnsupportedError : Error {
    using Error::Error;
};

// Invalid filterbank / framer / app configuration.
struct ConfigError : Error {
    using Error::Error;
};

// Physically implausible array geometry.
struct GeometryError : Error {
    using Error::Error;
};

// Classifier training cannot proceed (class too small, fold infeasible).
struct TrainingError : Error {
    using Error::Error;
};

// Training data carries no usable information (all-identical features).
struct DegenerateDataError : TrainingError {
    using TrainingError::TrainingError;
};

// Feature / model configuration hashes do not match.
struct CompatibilityError : Error {
    using Error::Error;
};

// An operation that needs data received none (empty histogram, silent input,
// audio shorter than one frame).
struct NoDataError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace amsloc
