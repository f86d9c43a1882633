#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cauchysum {

/// Base of every input-level failure the library reports. The CLI maps these
/// to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ContextMismatch : public Error {
public:
    using Error::Error;
};

class OrderingError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class SizeGuardExceeded : public Error {
public:
    using Error::Error;
};

class UnsortedInput : public Error {
public:
    using Error::Error;
};

class ExactZeroPivot : public Error {
public:
    using Error::Error;
};

/// Division by a non-invertible element. `value()` carries the rendered
/// offending scalar (for matrix inversion, the determinant).
class NotInvertible : public Error {
public:
    explicit NotInvertible(std::string value)
        : Error("not invertible: " + value), value_(std::move(value)) {}
    const std::string& value() const { return value_; }

private:
    std::string value_;
};

/// A Cauchy pair sum x_i + y_j that is not invertible. Indices are zero-based;
/// the message shows them one-based.
class NonInvertiblePairSum : public Error {
public:
    NonInvertiblePairSum(std::size_t i, std::size_t j)
        : Error("NonInvertiblePairSum(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")"),
          row(i), col(j) {}
    std::size_t row;
    std::size_t col;
};

}  // namespace cauchysum
