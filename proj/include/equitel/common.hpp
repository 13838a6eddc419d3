#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <string>

namespace equitel {

using cxd = std::complex<double>;
using Rng = std::mt19937_64;

// Global equality tolerance for unitarity, orthogonality and equivariance
// checks. Unit-norm invariants use the tighter constant; tau discovery in
// verify_equivariant uses the looser one (trace magnitudes are either ~n or
// ~0, so the gap is huge).
inline constexpr double kTol = 1e-9;
inline constexpr double kTightTol = 1e-12;
inline constexpr double kTauTol = 1e-6;
inline constexpr double kRootResidual = 1e-12;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input (files, CLI parameters). CLI exit code 3.
struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

// A mathematical check failed (non-unitary element, broken orthogonality,
// action axiom violated, incompatible channel, ...). CLI exit code 2.
struct VerificationError : Error {
    explicit VerificationError(const std::string& msg) : Error(msg) {}
};

// The requested object provably does not exist (out-of-range family
// parameter, dimension bound, nonexistence row). CLI exit code 4.
struct RefusalError : Error {
    explicit RefusalError(const std::string& msg) : Error(msg) {}
};

}  // namespace equitel
