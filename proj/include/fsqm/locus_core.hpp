#pragma once

#include "fsqm/complex_kernel.hpp"
#include "fsqm/fractional_medium.hpp"

#include <string>

namespace fsqm {

/// Sign choice in Q_n^{+-} = pi n +- arccos(...).
enum class Branch { Plus, Minus };
/// Spectral singularity (M22 = 0) or coherent perfect absorption (M11 = 0).
enum class LocusKind { SS, CPA };

std::string to_string(Branch branch);
std::string to_string(LocusKind kind);
Branch branch_from_string(const std::string& name);
LocusKind kind_from_string(const std::string& name);

/// A point of the (rho, sigma) = (V_r/E, V_i/E) plane plus the mode labels.
/// Admissibility of n is a numerical finding, so any integer is accepted.
struct LocusParams {
    double rho;
    double sigma;
    LevyIndex alpha;
    int n;
    Branch branch;
};

/// Every intermediate of the locus construction at one parameter point.
struct LocusKernel {
    cplx omega;
    double p = 0.0;   ///< asinh(sqrt(tau)), always >= 0
    double q = 0.0;   ///< equals Q on the locus
    double tau = 0.0;
    double Q = 0.0;
    double H = 0.0;   ///< k_alpha d at the candidate point
    cplx residual;    ///< S~ (SS) or C~ (CPA)
    double residual_rel = 0.0;
    double scalar = 0.0;
};

/// S~ or C~ with its two exponential terms; `relative` is |t1 - t2| / (|t1| + |t2|)
/// computed on rescaled terms, so it stays finite when the terms overflow.
struct LocusResidual {
    cplx value;
    cplx term1;
    cplx term2;
    double relative = 0.0;
};

/// Arccos arguments within this distance outside [-1, 1] are clamped.
inline constexpr double kArccosClamp = 1e-12;

/// [(1-rho)^2 + sigma^2]^{(alpha-1)/alpha} e^{-2i(alpha-1) theta / alpha}
cplx omega(double rho, double sigma, LevyIndex alpha);

/// Nonnegative root of x^2 + B x - C = 0 in x = sinh^2 p. Throws
/// SingularPointError when |1 - Omega|^2 <= 1e-14.
double tau(double rho, double sigma, LevyIndex alpha);

struct PQ {
    double p;
    double q;
};

/// p = 2 kd r^{1/alpha} sin(theta/alpha), q = 2 kd r^{1/alpha} cos(theta/alpha),
/// so that q - i p = 2 kappa_alpha d for kd = k_alpha d.
PQ p_and_q(double rho, double sigma, LevyIndex alpha, double kd);

double q_branch(const LocusParams& params);
double h_branch(const LocusParams& params);

/// asinh(sqrt(tau)) - Q tan(theta/alpha): vanishes on the SS locus.
double ss_scalar(const LocusParams& params);
/// -asinh(sqrt(tau)) - Q tan(theta/alpha): the CPA analogue (p < 0 for sigma < 0).
double cpa_scalar(const LocusParams& params);
double locus_scalar(const LocusParams& params, LocusKind kind);

LocusResidual ss_residual(const LocusParams& params);
LocusResidual cpa_residual(const LocusParams& params);
LocusResidual locus_residual(const LocusParams& params, LocusKind kind);

LocusKernel evaluate_kernel(const LocusParams& params, LocusKind kind);

} // namespace fsqm
