#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace faircut {

using RowIndex = std::uint32_t;

/// Ordered list of distinct row indices into a ColumnMatrix (distinctness is
/// only guaranteed when produced by sampling without replacement).
using RowSubset = std::vector<RowIndex>;

/// Bad hyperparameters or flag combinations.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Problems with the data itself (unsplittable dataset, column mismatch,
/// malformed CSV cell, single-class labels where two are required).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File-level I/O failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace faircut
