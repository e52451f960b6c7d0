#pragma once

#include <stdexcept>
#include <string>

namespace qdirac {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or mismatched numerical parameters (q, K, alpha, twist pairing, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An element left the computational domain of a derivation or representation.
class DomainError : public Error {
public:
    DomainError(const std::string& what, std::string operation, int degree)
        : Error(what), operation_(std::move(operation)), degree_(degree) {}

    const std::string& operation() const noexcept { return operation_; }
    /// Shift degree of the offending coefficient table, 0 when not applicable.
    int degree() const noexcept { return degree_; }

private:
    std::string operation_;
    int degree_;
};

/// The boundary symbol of an element with an unbounded coefficient function was requested.
class UnboundedSymbolError : public Error {
public:
    using Error::Error;
};

/// A weighted sum or integral does not converge.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// A dense solve would exceed the configured dimension cap.
class SizeError : public Error {
public:
    SizeError(const std::string& what, long dimension, long cap)
        : Error(what), dimension_(dimension), cap_(cap) {}

    long dimension() const noexcept { return dimension_; }
    long cap() const noexcept { return cap_; }

private:
    long dimension_;
    long cap_;
};

}  // namespace qdirac
