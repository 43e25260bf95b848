#pragma once

#include "fsqm/complex_kernel.hpp"

#include <string>

namespace fsqm {

enum class UnitMode { Natural, Physical };

std::string to_string(UnitMode mode);
UnitMode unit_mode_from_string(const std::string& name);

/// hbar, particle mass and characteristic velocity u. Immutable once built.
class UnitSystem {
public:
    /// hbar = 1, m = 1/2 (so D_2 = 1 and k_2 = sqrt(E)); u is free.
    static UnitSystem natural(double u = 1.0);
    /// SI: hbar in J s, electron mass in kg, u = 1e-5 c in m/s.
    static UnitSystem physical();
    /// Physical mode with caller-supplied constants.
    static UnitSystem physical(double hbar, double mass, double u);

    UnitMode mode() const noexcept { return mode_; }
    double hbar() const noexcept { return hbar_; }
    double mass() const noexcept { return mass_; }
    double u() const noexcept { return u_; }

    friend bool operator==(const UnitSystem&, const UnitSystem&) = default;

private:
    UnitSystem(UnitMode mode, double hbar, double mass, double u);

    UnitMode mode_;
    double hbar_;
    double mass_;
    double u_;
};

namespace si {
inline constexpr double kHbar = 1.054571817e-34;        // J s
inline constexpr double kElectronMass = 9.1093837015e-31; // kg
inline constexpr double kSpeedOfLight = 299792458.0;   // m/s
} // namespace si

/// Levy index, 1 < alpha <= 2.
class LevyIndex {
public:
    explicit LevyIndex(double alpha);
    double value() const noexcept { return alpha_; }
    friend bool operator==(const LevyIndex&, const LevyIndex&) = default;

private:
    double alpha_;
};

/// V = v_r + i v_i on (-d, d), zero outside.
class BarrierSpec {
public:
    BarrierSpec(double v_r, double v_i, double d);
    double v_r() const noexcept { return v_r_; }
    double v_i() const noexcept { return v_i_; }
    double d() const noexcept { return d_; }
    cplx potential() const noexcept { return {v_r_, v_i_}; }

private:
    double v_r_;
    double v_i_;
    double d_;
};

/// Relative threshold on |E - V| / E below which the barrier is degenerate.
inline constexpr double kDegeneracyEps = 1e-12;

/// u^{2-alpha} / (alpha m^{alpha-1}). Accepts any alpha > 0.
double diffusion_coefficient(const UnitSystem& units, double alpha);
double diffusion_coefficient(const UnitSystem& units, LevyIndex alpha);

/// (E / (D_alpha hbar^alpha))^{1/alpha}; throws DomainError for E <= 0.
double k_alpha(double energy, LevyIndex alpha, const UnitSystem& units);

/// Principal ((E - V) / (D_alpha hbar^alpha))^{1/alpha}, evaluated as
/// k_alpha * (1 - V/E)^{1/alpha} so that V = 0 gives kappa = k exactly.
cplx kappa_alpha(double energy, cplx potential, LevyIndex alpha, const UnitSystem& units);

struct DispersionFactors {
    cplx eta;
    cplx omega_plus;
    cplx omega_minus;
};

/// eta = (k/kappa)^{alpha-1}, omega_pm = (eta^2 +- 1) / (2 eta).
DispersionFactors eta_omega(double k, cplx kappa, LevyIndex alpha);

} // namespace fsqm
