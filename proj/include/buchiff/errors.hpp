/*
 * errors.hpp
 * ----------
 * Exception taxonomy for the library. Every failure mode callers are meant
 * to distinguish gets its own type; all derive from buchiff::Error.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace buchiff {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* arithmetic */
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w = "division by zero") : Error(w) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error(w) {}
};

/* finite fields */
struct NotPrime : Error {
    explicit NotPrime(const std::string& w) : Error(w) {}
};
struct IrreducibleSearchFailed : Error {
    explicit IrreducibleSearchFailed(const std::string& w) : Error(w) {}
};
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& w) : Error(w) {}
};
struct EvenCharacteristic : Error {
    explicit EvenCharacteristic(const std::string& w) : Error(w) {}
};

/* polynomials */
struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& w = "zero polynomial not allowed here") : Error(w) {}
};
struct DegreeTooSmall : Error {
    explicit DegreeTooSmall(const std::string& w) : Error(w) {}
};
struct CharPUnsupportedShape : Error {
    explicit CharPUnsupportedShape(const std::string& w) : Error(w) {}
};

/* rational functions and forms */
struct ZeroFunction : Error {
    explicit ZeroFunction(const std::string& w = "zero function is degenerate") : Error(w) {}
};
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& w) : Error(w) {}
};

/* sequences */
struct TooShort : Error {
    explicit TooShort(const std::string& w) : Error(w) {}
};

/* verification-grade failures: a mathematical claim the code checks did not
   hold. The CLI maps these to exit code 2. */
struct TheoremViolation : Error {
    std::string witness; // serialized offending object, for reports
    explicit TheoremViolation(const std::string& w, std::string wit = "")
        : Error(w), witness(std::move(wit)) {}
};
struct VerificationFailed : Error {
    explicit VerificationFailed(const std::string& w) : Error(w) {}
};

/* geometry */
struct ConstantMap : Error {
    explicit ConstantMap(const std::string& w = "map must be non-constant") : Error(w) {}
};
struct ConstantInput : Error {
    explicit ConstantInput(const std::string& w = "input must be non-constant") : Error(w) {}
};

/* parser */
struct SyntaxError : Error {
    long column; // 1-based position in the source text
    SyntaxError(const std::string& w, long col) : Error(w), column(col) {}
};
struct WrongVariable : SyntaxError {
    WrongVariable(const std::string& w, long col) : SyntaxError(w, col) {}
};
struct NegativeExponent : SyntaxError {
    NegativeExponent(const std::string& w, long col) : SyntaxError(w, col) {}
};
struct DivisionInPolyContext : SyntaxError {
    DivisionInPolyContext(const std::string& w, long col) : SyntaxError(w, col) {}
};

} // namespace buchiff
