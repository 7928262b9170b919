#pragma once

#include <stdexcept>
#include <string>

namespace hopfpfaff {

// Malformed or inconsistent input data. The CLI maps these to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation not available for the given mode or resonance class. Exit code 3.
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : InputError {
    explicit DimensionMismatch(const std::string& msg) : InputError(msg) {}
};

struct ZeroForm : InputError {
    explicit ZeroForm(const std::string& msg) : InputError(msg) {}
};

struct DegenerateGenerators : InputError {
    explicit DegenerateGenerators(const std::string& msg) : InputError(msg) {}
};

// The requested value is not a monomial in the eigenvalues; every twisted
// section space for such a character is zero.
struct NotMonomialCharacter : std::runtime_error {
    explicit NotMonomialCharacter(const std::string& msg) : std::runtime_error(msg) {}
};

struct SymbolicModeUnsupported : UnsupportedError {
    explicit SymbolicModeUnsupported(const std::string& msg) : UnsupportedError(msg) {}
};

struct SymbolicResonantUnsupported : UnsupportedError {
    explicit SymbolicResonantUnsupported(const std::string& msg) : UnsupportedError(msg) {}
};

struct GeneralResonantUnsupported : UnsupportedError {
    explicit GeneralResonantUnsupported(const std::string& msg) : UnsupportedError(msg) {}
};

struct WrongClass : UnsupportedError {
    explicit WrongClass(const std::string& msg) : UnsupportedError(msg) {}
};

}  // namespace hopfpfaff
