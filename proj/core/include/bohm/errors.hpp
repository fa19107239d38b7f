#pragma once

#include <stdexcept>
#include <string>

namespace bohm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Rejected construction parameters (grid extents, scenario settings, ...).
class InvalidConfigError : public Error {
public:
    using Error::Error;
};

/// Operation on an identically-zero (or otherwise unusable) state.
class DegenerateStateError : public Error {
public:
    using Error::Error;
};

/// Two fields that must share a grid do not.
class GridMismatchError : public Error {
public:
    using Error::Error;
};

/// A position-dependent construction does not fit the grid (e.g. a
/// coupling point too close to a wall).
class GeometryError : public Error {
public:
    using Error::Error;
};

/// The grid cannot resolve the requested mode.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Numerical routine failed to converge or produced non-finite values.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Propagation integrity violated (norm drift beyond contract).
class PropagationError : public Error {
public:
    using Error::Error;
};

/// Wave amplitude reached the edge of a supposedly-wide open domain.
class DomainTooSmallError : public Error {
public:
    using Error::Error;
};

} // namespace bohm
