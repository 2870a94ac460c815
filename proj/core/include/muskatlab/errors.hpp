#pragma once

#include <stdexcept>
#include <string>

namespace muskat {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteError : Error {
    using Error::Error;
};
struct GridMismatchError : Error {
    using Error::Error;
};
struct NonZeroMeanError : Error {
    using Error::Error;
};
struct EpsilonRangeError : Error {
    using Error::Error;
};
struct NegativeTimeError : Error {
    using Error::Error;
};
struct ZeroAlphaError : Error {
    using Error::Error;
};
struct MissingNodeError : Error {
    using Error::Error;
};
struct SpecRangeError : Error {
    using Error::Error;
};
struct NuRangeError : Error {
    using Error::Error;
};
struct ExponentMismatchError : Error {
    using Error::Error;
};
struct ParamRangeError : Error {
    using Error::Error;
};
struct DegenerateRhsError : Error {
    using Error::Error;
};
struct BlowupError : Error {
    double time;
    BlowupError(const std::string& what, double t) : Error(what), time(t) {}
};
struct InsufficientDataError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace muskat
