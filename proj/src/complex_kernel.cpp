#include "fsqm/complex_kernel.hpp"

#include "fsqm/errors.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

namespace fsqm {

cplx principal_power(cplx z, double a)
{
    if (z == cplx{0.0, 0.0}) {
        if (a > 0.0) return {0.0, 0.0};
        throw DomainError("principal_power: zero base with non-positive exponent");
    }
    return std::exp(a * std::log(z));
}

PolarForm polar_decompose(double rho, double sigma)
{
    const double x = 1.0 - rho;
    if (x == 0.0 && sigma == 0.0) {
        throw SingularPointError("polar_decompose: (rho, sigma) = (1, 0)");
    }
    PolarForm out;
    out.r = std::hypot(x, sigma);
    // atan2(+0, x<0) = +pi, atan2(-0, x<0) = -pi; fold the latter onto pi.
    out.theta = std::atan2(sigma, x);
    if (out.theta == -std::numbers::pi) out.theta = std::numbers::pi;
    return out;
}

std::vector<Bracket> bracket_scan(const RealFunction& f, double lo, double hi, int steps)
{
    if (!(lo < hi) || steps < 2) {
        throw DomainError("bracket_scan: need lo < hi and steps >= 2");
    }
    std::vector<Bracket> out;
    const double width = hi - lo;
    double x_prev = lo;
    double f_prev = f(lo);
    for (int i = 1; i <= steps; ++i) {
        const double x = (i == steps) ? hi : lo + width * (static_cast<double>(i) / steps);
        const double fx = f(x);
        if (std::isfinite(f_prev) && std::isfinite(fx) && (f_prev < 0.0) != (fx < 0.0)) {
            out.push_back({x_prev, x, f_prev, fx});
        }
        x_prev = x;
        f_prev = fx;
    }
    return out;
}

double refine_root(const RealFunction& f, const Bracket& bracket, double tol)
{
    if (!(bracket.lo < bracket.hi) || bracket.f_lo * bracket.f_hi > 0.0 || !(tol > 0.0)) {
        throw DomainError("refine_root: invalid bracket or tolerance");
    }
    if (bracket.f_lo == 0.0) return bracket.lo;
    if (bracket.f_hi == 0.0) return bracket.hi;

    auto checked = [&f](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) {
            throw ConvergenceError("refine_root: non-finite residual at x = " + std::to_string(x));
        }
        return v;
    };
    auto width_ok = [tol](double a, double b) { return std::abs(b - a) < tol; };

    std::uintmax_t iterations = kRootIterationCap;
    const auto [a, b] = boost::math::tools::toms748_solve(checked, bracket.lo, bracket.hi, bracket.f_lo,
                                                          bracket.f_hi, width_ok, iterations);
    const double fa = checked(a);
    const double fb = checked(b);
    if (fa != 0.0 && fb != 0.0 && !width_ok(a, b)) {
        throw ConvergenceError("refine_root: no convergence after " + std::to_string(kRootIterationCap) +
                               " iterations");
    }
    return std::abs(fa) <= std::abs(fb) ? a : b;
}

} // namespace fsqm
