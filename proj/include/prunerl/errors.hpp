#pragma once

#include <stdexcept>
#include <string>
#include <cstdint>

namespace prunerl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape disagreement between a vector/matrix and the layer expecting it.
struct DimMismatchError : Error {
    int layer_index;
    DimMismatchError(const std::string& msg, int layer)
        : Error(msg), layer_index(layer) {}
};

// A GradTape that does not belong to the network passed to backward().
struct TapeError : Error {
    using Error::Error;
};

// A loss or weight turned NaN/Inf; `where` names the computation.
struct NonFiniteError : Error {
    std::string where;
    double value;
    NonFiniteError(const std::string& msg, std::string where_, double value_)
        : Error(msg), where(std::move(where_)), value(value_) {}
};

struct EpisodeDoneError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    std::string path;
    IoError(const std::string& msg, std::string path_)
        : Error(msg + ": " + path_), path(std::move(path_)) {}
};

struct FormatVersionError : Error {
    std::uint32_t found;
    std::uint32_t expected;
    FormatVersionError(const std::string& msg, std::uint32_t found_, std::uint32_t expected_)
        : Error(msg), found(found_), expected(expected_) {}
};

}  // namespace prunerl
