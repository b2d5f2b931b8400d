#pragma once

#include <stdexcept>
#include <string>

namespace flexcool {

// Invalid physical input or malformed configuration document.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Lyapunov solve requested for a drift matrix that is not Hurwitz.
class UnstableSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lyapunov operator numerically singular (near-marginal stability).
class SolverDegenerate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigenvalue computation did not converge. Never reported as "unstable".
class EigenFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bipartite covariance violating the Gaussian-state bound.
class NonPhysical : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace flexcool
