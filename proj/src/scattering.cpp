#include "fsqm/scattering.hpp"

#include "fsqm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fsqm {

namespace {

constexpr cplx kI{0.0, 1.0};

struct CosSin {
    cplx cos;
    cplx sin;
};

CosSin cos_sin(cplx x)
{
    if (std::abs(x.imag()) > kMaxImaginaryPhase) {
        throw OverflowError("transfer_matrix: |Im(2 kappa d)| = " + std::to_string(std::abs(x.imag())) +
                            " exceeds overflow guard");
    }
    const cplx ep = std::exp(kI * x);
    const cplx em = std::exp(-kI * x);
    return {0.5 * (ep + em), (ep - em) / (2.0 * kI)};
}

} // namespace

TransferMatrix transfer_matrix(double energy, const BarrierSpec& barrier, LevyIndex alpha, const UnitSystem& units)
{
    const double k = k_alpha(energy, alpha, units);
    const cplx kappa = kappa_alpha(energy, barrier.potential(), alpha, units);
    const auto [eta, omega_plus, omega_minus] = eta_omega(k, kappa, alpha);
    const double d = barrier.d();

    const auto [c, s] = cos_sin(2.0 * kappa * d);
    const cplx phase = std::polar(1.0, 2.0 * k * d);

    TransferMatrix m;
    m.m11 = (c + kI * omega_plus * s) * std::conj(phase);
    m.m22 = (c - kI * omega_plus * s) * phase;
    m.m12 = -kI * omega_minus * s;
    m.m21 = kI * omega_minus * s;
    return m;
}

ScatteringAmplitudes amplitudes(const TransferMatrix& m)
{
    ScatteringAmplitudes out;
    const double scale = std::max(std::abs(m.m11), 1.0);
    if (std::abs(m.m22) < kSingularityEps * scale) {
        constexpr double inf = std::numeric_limits<double>::infinity();
        out.t = {inf, inf};
        out.r_left = {inf, inf};
        out.r_right = {inf, inf};
        out.T = out.R_left = out.R_right = inf;
        out.spectral_singularity = true;
        return out;
    }
    out.t = 1.0 / m.m22;
    out.r_left = -m.m21 / m.m22;
    out.r_right = m.m12 / m.m22;
    out.T = std::norm(out.t);
    out.R_left = std::norm(out.r_left);
    out.R_right = std::norm(out.r_right);
    return out;
}

std::vector<CoefficientRow> scan_coefficients(const std::vector<double>& energies, const BarrierSpec& barrier,
                                              LevyIndex alpha, const UnitSystem& units)
{
    if (energies.empty()) throw DomainError("scan_coefficients: empty energy grid");
    if (!std::is_sorted(energies.begin(), energies.end())) {
        throw DomainError("scan_coefficients: energy grid must be ascending");
    }
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<CoefficientRow> rows;
    rows.reserve(energies.size());
    for (double e : energies) {
        CoefficientRow row{e, nan, nan, nan, false, std::nullopt};
        try {
            const auto amp = amplitudes(transfer_matrix(e, barrier, alpha, units));
            row.T = amp.T;
            row.R_left = amp.R_left;
            row.R_right = amp.R_right;
            row.spectral_singularity = amp.spectral_singularity;
        } catch (const std::exception& ex) {
            row.error = ex.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace fsqm
