#pragma once

#include <stdexcept>
#include <string>

namespace restrlab {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation at a pole of a meromorphic function.
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// Series/summation lost too many digits to cancellation.
class PrecisionLossError : public Error {
public:
    explicit PrecisionLossError(const std::string& msg) : Error(msg) {}
};

// Series with no chance of convergence (e.g. p = q+1 outside the unit disk).
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// Invalid hypergeometric parameters (lower parameter at a pole).
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

// Quadrature budget exhausted with the error estimate above tolerance.
class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

class FitError : public Error {
public:
    explicit FitError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace restrlab
