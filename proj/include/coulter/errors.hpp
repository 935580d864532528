// errors.hpp
//
// Typed error hierarchy. Every error a caller may want to catch by kind
// gets its own class; all derive from CoulterError.

#pragma once

#include <stdexcept>
#include <string>

namespace coulter {

struct CoulterError : std::runtime_error {
    explicit CoulterError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrimeError : CoulterError {
    explicit NotPrimeError(const std::string& msg) : CoulterError(msg) {}
};

struct EvenPrimeError : CoulterError {
    explicit EvenPrimeError(const std::string& msg) : CoulterError(msg) {}
};

struct DegreeZeroError : CoulterError {
    explicit DegreeZeroError(const std::string& msg) : CoulterError(msg) {}
};

struct CtxMismatchError : CoulterError {
    explicit CtxMismatchError(const std::string& msg) : CoulterError(msg) {}
};

struct DivisionByZeroError : CoulterError {
    explicit DivisionByZeroError(const std::string& msg) : CoulterError(msg) {}
};

struct OverflowError : CoulterError {
    explicit OverflowError(const std::string& msg) : CoulterError(msg) {}
};

struct PrimeMismatchError : CoulterError {
    explicit PrimeMismatchError(const std::string& msg) : CoulterError(msg) {}
};

struct ZeroCoefficientError : CoulterError {
    explicit ZeroCoefficientError(const std::string& msg) : CoulterError(msg) {}
};

// Closed forms for the A/B/n/N family need e/gcd(alpha,e) odd.
struct EvenEOverDError : CoulterError {
    explicit EvenEOverDError(const std::string& msg) : CoulterError(msg) {}
};

struct ZeroBError : CoulterError {
    explicit ZeroBError(const std::string& msg) : CoulterError(msg) {}
};

struct EnumerationCeilingError : CoulterError {
    explicit EnumerationCeilingError(const std::string& msg) : CoulterError(msg) {}
};

struct NotPermutationError : CoulterError {
    explicit NotPermutationError(const std::string& msg) : CoulterError(msg) {}
};

struct IsPermutationError : CoulterError {
    explicit IsPermutationError(const std::string& msg) : CoulterError(msg) {}
};

}  // namespace coulter
