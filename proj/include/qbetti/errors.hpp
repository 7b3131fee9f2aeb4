#pragma once

// Failure taxonomy. The bases exist so main() can map a failure to an exit
// code with catch clauses instead of string matching:
//
//   DomainError        bad arguments from the caller         exit 64
//   ObstructionError   a quotient the theory refuses to give exit 2
//   InvariantViolation a self-check failed, output is void   exit 1
//
// Obstructions normally travel inside QuotientReport as data; the exception
// forms are thrown only where no report can be returned at all (for example
// the halving check on a system whose real quotient does not exist).

#include <stdexcept>
#include <string>

namespace qbetti {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Arithmetic on series whose field tags differ.
struct FieldMismatch final : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

// divide() cannot produce a series q with q*b = a.
struct InexactDivision final : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

// halveExponents() on a series with a surviving odd-degree term.
struct NonzeroOddCoefficient final : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

// Quotient extraction left nonzero coefficients past the expected top degree.
struct NotPolynomial final : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

// Stratum codimensions. Odd complex codimension can never happen (the
// formula is even by construction); negative codimension names an index
// whose stratum should have been empty but contributed anyway.
struct OddCodimension final : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};
struct NegativeCodimension final : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct ObstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gcd(n, sum of weights) != 1: the diagonal stabilizer acts non-freely.
struct GcdObstructionError final : ObstructionError {
    using ObstructionError::ObstructionError;
};

// Real quotient with n even: the two-group cover does not split.
struct ParityObstructionError final : ObstructionError {
    using ObstructionError::ObstructionError;
};

}  // namespace qbetti
