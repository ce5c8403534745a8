#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace penta5 {

/// Base class for all penta5 errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inversion of a series that is zero up to its truncation bound.
class ZeroSeriesError : public Error {
public:
    ZeroSeriesError() : Error("cannot invert a series that is zero up to truncation") {}
};

/// Inversion of a series whose leading coefficient is not +-1.
/// All eta-quotient denominators are unit-leading, so hitting this
/// signals a modeling bug, not a numeric edge case.
class NonUnitLeadingError : public Error {
public:
    explicit NonUnitLeadingError(const std::string& lead)
        : Error("leading coefficient " + lead + " is not a unit (+-1)") {}
};

/// A coefficient was requested at or beyond the truncation bound.
class BeyondTruncationError : public Error {
public:
    BeyondTruncationError(std::int64_t exponent, std::int64_t trunc)
        : Error("coefficient of q^" + std::to_string(exponent) +
                " requested, but series is only exact below q^" + std::to_string(trunc)) {}
};

/// A computation could not be carried out soundly at the given bound.
class InsufficientTruncationError : public Error {
public:
    using Error::Error;
};

/// A theorem driver produced a non-integral arithmetic progression,
/// meaning the driver itself is buggy.
class NonIntegralProgressionError : public Error {
public:
    using Error::Error;
};

/// Expression parse failure, with byte offset and the token set that
/// would have been accepted at that point.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::string expected, std::string detail = {})
        : Error("syntax error at offset " + std::to_string(offset) + ": expected " + expected +
                (detail.empty() ? "" : " (" + detail + ")")),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

}  // namespace penta5
