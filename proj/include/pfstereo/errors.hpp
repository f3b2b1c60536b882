#pragma once

#include <stdexcept>
#include <string>

namespace pfstereo {

// Error hierarchy shared across the library. The CLI maps these onto
// process exit codes (usage 2, data 3, numeric 4).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape/odd-size violations (inputs not divisible by 32, channel mismatch, ...).
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Bad config documents, unknown keys, incompatible checkpoints.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Missing or malformed files, manifest entries, disk formats.
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

// NaN/Inf encountered where finite values are required.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

}  // namespace pfstereo
