#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace salielab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a documented precondition is violated (argument out of range).
struct PreconditionViolation : Error { using Error::Error; };

// --- field construction ---
struct NotPrime : Error { using Error::Error; };
struct EvenModulus : Error { using Error::Error; };
struct ModulusTooLarge : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };

// --- sum hypotheses ---
struct SharedFactor : Error { using Error::Error; };    // gcd hypothesis fails
struct SharedFactorM : Error { using Error::Error; };   // gcd(m, q) > 1
struct LengthMismatch : Error { using Error::Error; };
struct UnboundedWeights : Error { using Error::Error; };

// First (m, n) whose inner argument is divisible by q.
struct DegenerateTerm : Error {
    std::uint64_t m, n;
    DegenerateTerm(std::uint64_t m_, std::uint64_t n_)
        : Error("degenerate term at m=" + std::to_string(m_) + ", n=" + std::to_string(n_)),
          m(m_), n(n_) {}
};

// Named violated inequality, e.g. "M <= q".
struct ConditionFail : Error {
    std::string condition;
    explicit ConditionFail(std::string cond)
        : Error("condition failed: " + cond), condition(std::move(cond)) {}
};
struct HypothesisFail : Error { using Error::Error; };

// --- sieving / decomposition ---
struct LimitTooLarge : Error { using Error::Error; };
struct DepthTooLarge : Error { using Error::Error; };

// --- oracles ---
struct OracleTooLarge : Error { using Error::Error; };

// --- distribution ---
struct EmptyMultiset : Error { using Error::Error; };
struct EmptySpectrum : Error { using Error::Error; };
struct NoPrimes : Error { using Error::Error; };

// --- experiment runner ---
struct SpecParse : Error { using Error::Error; };
struct UnknownKind : Error { using Error::Error; };
struct ResourceExceeded : Error { using Error::Error; };
struct UnsupportedFormat : Error { using Error::Error; };

} // namespace salielab
