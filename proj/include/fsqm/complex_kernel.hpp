#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace fsqm {

using cplx = std::complex<double>;

/// 1 - rho - i sigma written as r e^{-i theta}.
struct PolarForm {
    double r = 0.0;
    double theta = 0.0; ///< in (-pi, pi]
};

/// Interval [lo, hi] with f(lo) f(hi) <= 0.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
};

using RealFunction = std::function<double(double)>;

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr int kRootIterationCap = 200;

/// exp(a (ln|z| + i Arg z)) on the principal branch.
///
/// The sign of a zero imaginary part selects the side of the cut, so
/// (-1, +0) maps to Arg = +pi and (-1, -0) to Arg = -pi. Throws DomainError
/// for z = 0 with a <= 0.
cplx principal_power(cplx z, double a);

/// Throws SingularPointError at (1, 0). On the cut (sigma = 0, rho > 1)
/// theta = pi, the limit from sigma > 0.
PolarForm polar_decompose(double rho, double sigma);

/// Samples f at steps + 1 evenly spaced points of [lo, hi] and returns every
/// adjacent pair whose signs differ, ascending. Non-finite samples break the
/// chain: no bracket is formed across them.
std::vector<Bracket> bracket_scan(const RealFunction& f, double lo, double hi, int steps);

/// Root of f inside the bracket to width `tol` (or an exact zero).
/// Throws ConvergenceError after kRootIterationCap iterations or when f
/// turns non-finite inside the bracket.
double refine_root(const RealFunction& f, const Bracket& bracket, double tol = kDefaultRootTol);

} // namespace fsqm
