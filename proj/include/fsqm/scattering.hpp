#pragma once

#include "fsqm/complex_kernel.hpp"
#include "fsqm/fractional_medium.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fsqm {

/// [A+; B+] = M [A-; B-] for plane waves A e^{ikx} + B e^{-ikx}.
struct TransferMatrix {
    cplx m11{1.0, 0.0};
    cplx m12{0.0, 0.0};
    cplx m21{0.0, 0.0};
    cplx m22{1.0, 0.0};

    cplx det() const noexcept { return m11 * m22 - m12 * m21; }
    /// Squared Frobenius norm, the natural scale of det() roundoff.
    double norm_sq() const noexcept
    {
        return std::norm(m11) + std::norm(m12) + std::norm(m21) + std::norm(m22);
    }
};

struct ScatteringAmplitudes {
    cplx t;
    cplx r_left;
    cplx r_right;
    double T = 0.0;
    double R_left = 0.0;
    double R_right = 0.0;
    /// M22 vanished to working precision: t and r diverge, T/R are +inf.
    bool spectral_singularity = false;
};

/// Guard on |Im(2 kappa d)| beyond which cos/sin overflow is imminent.
inline constexpr double kMaxImaginaryPhase = 700.0;
/// |M22| < kSingularityEps * max(|M11|, 1) signals a spectral singularity.
inline constexpr double kSingularityEps = 1e-12;

/// Fractional transfer matrix of the complex rectangular barrier.
///
///   M11 = [cos 2kd' + i w+ sin 2kd'] e^{-2ikd}
///   M22 = [cos 2kd' - i w+ sin 2kd'] e^{+2ikd}
///   M12 = -i w- sin 2kd',  M21 = +i w- sin 2kd'
///
/// with kd' = kappa_alpha d. The off-diagonal signs are the ones continuity
/// of psi and psi' gives for psi = A e^{ikx} + B e^{-ikx}; at alpha = 2 this
/// is the textbook barrier. Throws DegenerateBarrierError / OverflowError.
TransferMatrix transfer_matrix(double energy, const BarrierSpec& barrier, LevyIndex alpha,
                               const UnitSystem& units);

ScatteringAmplitudes amplitudes(const TransferMatrix& m);

struct CoefficientRow {
    double energy = 0.0;
    double T = 0.0;
    double R_left = 0.0;
    double R_right = 0.0;
    bool spectral_singularity = false;
    std::optional<std::string> error;
};

/// One row per grid energy; per-point failures become row errors.
std::vector<CoefficientRow> scan_coefficients(const std::vector<double>& energies, const BarrierSpec& barrier,
                                              LevyIndex alpha, const UnitSystem& units);

} // namespace fsqm
