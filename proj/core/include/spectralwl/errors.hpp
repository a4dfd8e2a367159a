#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spectralwl {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Semantically invalid argument (self-loop, bad index, unsorted spectrum, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A truncation selected eigenvalues that are not pairwise separated.
class NotSimpleError : public Error {
public:
    NotSimpleError(const std::string& msg, std::vector<int> colliding)
        : Error(msg), colliding_(std::move(colliding)) {}
    const std::vector<int>& colliding_indices() const { return colliding_; }

private:
    std::vector<int> colliding_;
};

// Input exceeds a configured search cap.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// An operation's stated hypothesis does not hold for the given input.
class FailedPreconditionError : public Error {
public:
    using Error::Error;
};

// Numerical routine failed to converge. Carries the final residual.
class NumericalError : public Error {
public:
    NumericalError(const std::string& msg, double residual)
        : Error(msg), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

}  // namespace spectralwl
