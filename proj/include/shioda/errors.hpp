#ifndef SHIODA_ERRORS_HPP
#define SHIODA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shioda {

// Base for all input-validation failures; internal invariant violations
// use InternalError instead so callers can map them to a distinct exit code.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonSquareError : Error {
    explicit NonSquareError(const std::string& msg = "matrix is not square") : Error(msg) {}
};

struct SingularError : Error {
    explicit SingularError(const std::string& msg = "matrix is singular") : Error(msg) {}
};

struct NegativeEntryError : Error {
    explicit NegativeEntryError(const std::string& msg) : Error(msg) {}
};

// analyze() rejects matrices whose derived weights q or dual weights q'
// are not strictly positive; the message names the offending index.
struct NonPositiveWeightError : Error {
    NonPositiveWeightError(const std::string& which, int index)
        : Error("non-positive weight: " + which + "[" + std::to_string(index + 1) + "]"),
          which_vector(which), offending_index(index) {}
    std::string which_vector;  // "q" or "q'"
    int offending_index;       // zero-based
};

struct NotCalabiYauError : Error {
    explicit NotCalabiYauError(const std::string& msg = "matrix does not satisfy the Calabi-Yau degree condition") : Error(msg) {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& msg = "dimension mismatch") : Error(msg) {}
};

struct ModulusMismatchError : Error {
    explicit ModulusMismatchError(const std::string& msg = "modulus mismatch") : Error(msg) {}
};

struct LengthMismatchError : Error {
    explicit LengthMismatchError(const std::string& msg = "length mismatch") : Error(msg) {}
};

struct WrongCountError : Error {
    explicit WrongCountError(const std::string& msg = "wrong number of exponent vectors") : Error(msg) {}
};

struct NegativeExponentError : Error {
    explicit NegativeExponentError(const std::string& msg = "negative exponent") : Error(msg) {}
};

// Violated internal invariant (never a user-input problem).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace shioda

#endif
