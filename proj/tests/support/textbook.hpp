#pragma once

// Reference implementations that share no code with the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace textbook {

using cplx = std::complex<double>;
using Mat = std::array<std::array<cplx, 2>, 2>;

inline Mat mul(const Mat& a, const Mat& b)
{
    Mat c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

inline Mat inv(const Mat& a)
{
    const cplx det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    return {{{a[1][1] / det, -a[0][1] / det}, {-a[1][0] / det, a[0][0] / det}}};
}

/// Columns: value and derivative of e^{iqx} and e^{-iqx}.
inline Mat wave(cplx q, double x)
{
    const cplx i{0.0, 1.0};
    const cplx ep = std::exp(i * q * x);
    const cplx em = std::exp(-i * q * x);
    return {{{ep, em}, {i * q * ep, -i * q * em}}};
}

/// Standard Schrodinger barrier V on (-d, d), 2m = hbar = 1, from continuity
/// of psi and psi' at both interfaces. [A+, B+] = M [A-, B-].
inline Mat barrier(double E, cplx V, double d)
{
    const cplx k = std::sqrt(cplx(E));
    const cplx K = std::sqrt(cplx(E) - V);
    return mul(mul(inv(wave(k, d)), wave(K, d)), mul(inv(wave(K, -d)), wave(k, -d)));
}

/// Alpha = 2 form of the SS residual with sqrt(z) and closed-form tau.
/// Returns {value, |term1| + |term2|}.
inline std::pair<cplx, double> ss_residual_alpha2(double rho, double sigma, int n, bool minus)
{
    const double pi = std::acos(-1.0);
    const cplx z{1.0 - rho, -sigma};
    const double den = rho * rho + sigma * sigma; // |1 - z|^2
    const double a = (1.0 - std::norm(z)) / den;
    const double b = -2.0 * sigma / den;
    const double B = 1.0 - a * a - b * b;
    const double C = b * b;
    const double tau = B >= 0.0 ? 2.0 * C / (B + std::sqrt(B * B + 4.0 * C)) : (-B + std::sqrt(B * B + 4.0 * C)) / 2.0;
    double arg = a / std::sqrt(1.0 + tau);
    arg = std::clamp(arg, -1.0, 1.0);
    const double Q = pi * n + (minus ? -1.0 : 1.0) * std::acos(arg);
    const cplx s = std::sqrt(z);
    const double H = Q / (2.0 * s.real());
    const cplx i{0.0, 1.0};
    const cplx t1 = std::exp(-2.0 * i * H * s) * (1.0 + s) * (1.0 + s);
    const cplx t2 = std::exp(2.0 * i * H * s) * (1.0 - s) * (1.0 - s);
    return {t1 - t2, std::abs(t1) + std::abs(t2)};
}

} // namespace textbook
