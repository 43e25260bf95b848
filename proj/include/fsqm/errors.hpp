#pragma once

#include <stdexcept>
#include <string>

namespace fsqm {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation at (rho, sigma) = (1, 0), where 1 - V/E vanishes.
class SingularPointError : public DomainError {
public:
    using DomainError::DomainError;
};

/// |E - V| below the degeneracy threshold, so kappa_alpha -> 0.
class DegenerateBarrierError : public DomainError {
public:
    using DomainError::DomainError;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// |Im(2 kappa d)| too large for double-precision cos/sin.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Physical reconstruction of a locus point failed the transfer-matrix check.
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoIntersectionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fsqm
