#ifndef POLYAPPROX_ERRORS_HPP
#define POLYAPPROX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyapprox {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input / parse problems (bad files, malformed numbers, bad ranges).
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

struct NonzeroConstantTerm : Error {
    NonzeroConstantTerm() : Error("composition requires a series with zero constant term") {}
};

struct ZeroConstantTerm : Error {
    ZeroConstantTerm() : Error("constant term is zero; log of the series is undefined") {}
};

struct InsufficientCoefficients : Error {
    explicit InsufficientCoefficients(std::size_t required)
        : Error("need exact coefficients a_0..a_" + std::to_string(required) +
                "; fewer are known"),
          required(required) {}
    std::size_t required;
};

struct DeltaOutOfRange : Error {
    DeltaOutOfRange() : Error("delta must lie in (0, 1)") {}
};

struct AlphaOutOfRange : Error {
    AlphaOutOfRange() : Error("alpha must lie in (0, pi/2]") {}
};

struct ContainmentCheckFailed : Error {
    ContainmentCheckFailed()
        : Error("no admissible rho found: transform image never fit the target region") {}
};

struct ConstantPolynomial : Error {
    ConstantPolynomial() : Error("operation requires a non-constant polynomial") {}
};

struct NotClawFree : Error {
    NotClawFree() : Error("graph contains an induced claw (K_{1,3})") {}
};

struct KTooLarge : Error {
    explicit KTooLarge(std::size_t k, std::size_t limit)
        : Error("K=" + std::to_string(k) + " exceeds the maximum structure size " +
                std::to_string(limit)) {}
};

struct TooLargeForOracle : Error {
    TooLargeForOracle() : Error("instance too large for full brute-force enumeration") {}
};

struct UnsupportedRegion : Error {
    UnsupportedRegion()
        : Error("experimental root regions are not wired into the estimation pipeline") {}
};

}  // namespace polyapprox

#endif
