#include "fsqm/locus_core.hpp"

#include "fsqm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fsqm {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx shifted_base(double rho, double sigma)
{
    // -sigma keeps the signed zero: sigma = +0 on the cut gives Arg = -pi, theta = pi.
    return {1.0 - rho, -sigma};
}

void check_params(const LocusParams& p)
{
    if (p.rho == 0.0 && p.sigma == 0.0) {
        throw SingularPointError("locus: (rho, sigma) = (0, 0) is the free particle");
    }
}

struct OmegaRatios {
    double a; ///< (1 - |Omega|^2) / |1 - Omega|^2
    double b; ///< 2 Im Omega / |1 - Omega|^2
};

OmegaRatios omega_ratios(cplx om)
{
    const double denom = std::norm(1.0 - om);
    if (denom <= 1e-14) {
        throw SingularPointError("locus: |1 - Omega|^2 vanishes");
    }
    return {(1.0 - std::norm(om)) / denom, 2.0 * om.imag() / denom};
}

double tau_from_ratios(const OmegaRatios& r)
{
    const double B = 1.0 - r.a * r.a - r.b * r.b;
    const double C = r.b * r.b;
    const double disc = std::sqrt(B * B + 4.0 * C);
    // The two forms avoid cancellation in -B + disc.
    return B <= 0.0 ? 0.5 * (disc - B) : 2.0 * C / (B + disc);
}

double q_from(const OmegaRatios& r, double tau_value, int n, Branch branch)
{
    double c = r.a / std::sqrt(1.0 + tau_value);
    if (std::abs(c) > 1.0 + kArccosClamp) {
        throw DomainError("q_branch: arccos argument " + std::to_string(c) + " outside [-1, 1]");
    }
    c = std::clamp(c, -1.0, 1.0);
    const double sign = branch == Branch::Plus ? 1.0 : -1.0;
    return std::numbers::pi * n + sign * std::acos(c);
}

double h_from(const PolarForm& pf, double alpha, double q)
{
    const double c = std::cos(pf.theta / alpha);
    if (std::abs(c) < 1e-14) {
        throw DomainError("h_branch: cos(theta/alpha) vanishes");
    }
    return q / (2.0 * std::pow(pf.r, 1.0 / alpha) * c);
}

LocusResidual residual_impl(const LocusParams& params, double H, LocusKind kind)
{
    const double a = params.alpha.value();
    const cplx z = shifted_base(params.rho, params.sigma);
    const cplx w = principal_power(z, (a - 1.0) / a);
    const cplx x = 2.0 * H * principal_power(z, 1.0 / a);
    const cplx plus = (1.0 + w) * (1.0 + w);
    const cplx minus = (1.0 - w) * (1.0 - w);

    // SS: e^{-ix}(1+w)^2 - e^{ix}(1-w)^2; CPA swaps the exponent signs.
    const cplx e1 = kind == LocusKind::SS ? -kI * x : kI * x;
    const cplx e2 = -e1;
    const double shift = std::max(e1.real(), e2.real());
    const cplx t1n = std::exp(e1 - shift) * plus;
    const cplx t2n = std::exp(e2 - shift) * minus;

    LocusResidual out;
    out.term1 = std::exp(e1) * plus;
    out.term2 = std::exp(e2) * minus;
    out.value = out.term1 - out.term2;
    const double scale = std::abs(t1n) + std::abs(t2n);
    out.relative = scale > 0.0 ? std::abs(t1n - t2n) / scale : 0.0;
    return out;
}

} // namespace

std::string to_string(Branch branch)
{
    return branch == Branch::Plus ? "plus" : "minus";
}

std::string to_string(LocusKind kind)
{
    return kind == LocusKind::SS ? "ss" : "cpa";
}

Branch branch_from_string(const std::string& name)
{
    if (name == "plus" || name == "+") return Branch::Plus;
    if (name == "minus" || name == "-") return Branch::Minus;
    throw DomainError("unknown branch '" + name + "'");
}

LocusKind kind_from_string(const std::string& name)
{
    if (name == "ss" || name == "SS") return LocusKind::SS;
    if (name == "cpa" || name == "CPA") return LocusKind::CPA;
    throw DomainError("unknown locus kind '" + name + "' (expected ss|cpa)");
}

cplx omega(double rho, double sigma, LevyIndex alpha)
{
    const PolarForm pf = polar_decompose(rho, sigma);
    const double a = alpha.value();
    return std::polar(std::pow(pf.r * pf.r, (a - 1.0) / a), -2.0 * (a - 1.0) * pf.theta / a);
}

double tau(double rho, double sigma, LevyIndex alpha)
{
    return tau_from_ratios(omega_ratios(omega(rho, sigma, alpha)));
}

PQ p_and_q(double rho, double sigma, LevyIndex alpha, double kd)
{
    const PolarForm pf = polar_decompose(rho, sigma);
    const double a = alpha.value();
    const double amp = 2.0 * kd * std::pow(pf.r, 1.0 / a);
    return {amp * std::sin(pf.theta / a), amp * std::cos(pf.theta / a)};
}

double q_branch(const LocusParams& params)
{
    check_params(params);
    const OmegaRatios r = omega_ratios(omega(params.rho, params.sigma, params.alpha));
    return q_from(r, tau_from_ratios(r), params.n, params.branch);
}

double h_branch(const LocusParams& params)
{
    const double q = q_branch(params);
    return h_from(polar_decompose(params.rho, params.sigma), params.alpha.value(), q);
}

double ss_scalar(const LocusParams& params)
{
    return locus_scalar(params, LocusKind::SS);
}

double cpa_scalar(const LocusParams& params)
{
    return locus_scalar(params, LocusKind::CPA);
}

double locus_scalar(const LocusParams& params, LocusKind kind)
{
    check_params(params);
    const PolarForm pf = polar_decompose(params.rho, params.sigma);
    const double a = params.alpha.value();
    const OmegaRatios r = omega_ratios(omega(params.rho, params.sigma, params.alpha));
    const double t = tau_from_ratios(r);
    const double q = q_from(r, t, params.n, params.branch);
    const double p = std::asinh(std::sqrt(t));
    const double signed_p = kind == LocusKind::SS ? p : -p;
    return signed_p - q * std::tan(pf.theta / a);
}

LocusResidual ss_residual(const LocusParams& params)
{
    return locus_residual(params, LocusKind::SS);
}

LocusResidual cpa_residual(const LocusParams& params)
{
    return locus_residual(params, LocusKind::CPA);
}

LocusResidual locus_residual(const LocusParams& params, LocusKind kind)
{
    return residual_impl(params, h_branch(params), kind);
}

LocusKernel evaluate_kernel(const LocusParams& params, LocusKind kind)
{
    check_params(params);
    const PolarForm pf = polar_decompose(params.rho, params.sigma);
    const double a = params.alpha.value();

    LocusKernel k;
    k.omega = omega(params.rho, params.sigma, params.alpha);
    const OmegaRatios r = omega_ratios(k.omega);
    k.tau = tau_from_ratios(r);
    k.p = std::asinh(std::sqrt(k.tau));
    k.Q = q_from(r, k.tau, params.n, params.branch);
    k.q = k.Q;
    k.H = h_from(pf, a, k.Q);
    const double signed_p = kind == LocusKind::SS ? k.p : -k.p;
    k.scalar = signed_p - k.Q * std::tan(pf.theta / a);
    const LocusResidual res = residual_impl(params, k.H, kind);
    k.residual = res.value;
    k.residual_rel = res.relative;
    return k;
}

} // namespace fsqm
