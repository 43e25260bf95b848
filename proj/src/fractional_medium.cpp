#include "fsqm/fractional_medium.hpp"

#include "fsqm/errors.hpp"

#include <cmath>

namespace fsqm {

std::string to_string(UnitMode mode)
{
    return mode == UnitMode::Natural ? "natural" : "physical";
}

UnitMode unit_mode_from_string(const std::string& name)
{
    if (name == "natural") return UnitMode::Natural;
    if (name == "physical") return UnitMode::Physical;
    throw DomainError("unknown unit mode '" + name + "' (expected natural|physical)");
}

UnitSystem::UnitSystem(UnitMode mode, double hbar, double mass, double u)
    : mode_(mode), hbar_(hbar), mass_(mass), u_(u)
{
    if (!(hbar > 0.0) || !(mass > 0.0) || !(u > 0.0) || !std::isfinite(hbar) || !std::isfinite(mass) ||
        !std::isfinite(u)) {
        throw DomainError("UnitSystem: hbar, mass and u must be positive and finite");
    }
}

UnitSystem UnitSystem::natural(double u)
{
    return UnitSystem(UnitMode::Natural, 1.0, 0.5, u);
}

UnitSystem UnitSystem::physical()
{
    return UnitSystem(UnitMode::Physical, si::kHbar, si::kElectronMass, 1.0e-5 * si::kSpeedOfLight);
}

UnitSystem UnitSystem::physical(double hbar, double mass, double u)
{
    return UnitSystem(UnitMode::Physical, hbar, mass, u);
}

LevyIndex::LevyIndex(double alpha) : alpha_(alpha)
{
    if (!(alpha > 1.0 && alpha <= 2.0)) {
        throw DomainError("Levy index must satisfy 1 < alpha <= 2, got " + std::to_string(alpha));
    }
}

BarrierSpec::BarrierSpec(double v_r, double v_i, double d) : v_r_(v_r), v_i_(v_i), d_(d)
{
    if (!(d > 0.0) || !std::isfinite(d) || !std::isfinite(v_r) || !std::isfinite(v_i)) {
        throw DomainError("BarrierSpec: half-width must be positive and potentials finite");
    }
}

double diffusion_coefficient(const UnitSystem& units, double alpha)
{
    if (!(alpha > 0.0)) throw DomainError("diffusion_coefficient: alpha must be positive");
    return std::pow(units.u(), 2.0 - alpha) / (alpha * std::pow(units.mass(), alpha - 1.0));
}

double diffusion_coefficient(const UnitSystem& units, LevyIndex alpha)
{
    return diffusion_coefficient(units, alpha.value());
}

double k_alpha(double energy, LevyIndex alpha, const UnitSystem& units)
{
    if (!(energy > 0.0)) throw DomainError("k_alpha: energy must be positive");
    const double a = alpha.value();
    const double scale = diffusion_coefficient(units, a) * std::pow(units.hbar(), a);
    return std::pow(energy / scale, 1.0 / a);
}

cplx kappa_alpha(double energy, cplx potential, LevyIndex alpha, const UnitSystem& units)
{
    const double k = k_alpha(energy, alpha, units);
    if (std::abs(cplx(energy) - potential) < kDegeneracyEps * energy) {
        throw DegenerateBarrierError("kappa_alpha: E - V vanishes (degenerate barrier)");
    }
    // (E - V)/E keeps +0 imaginary for real V, i.e. Arg = +pi above the barrier.
    const cplx z = (cplx(energy) - potential) / energy;
    return k * principal_power(z, 1.0 / alpha.value());
}

DispersionFactors eta_omega(double k, cplx kappa, LevyIndex alpha)
{
    if (std::abs(kappa) < kDegeneracyEps * k) {
        throw DegenerateBarrierError("eta_omega: |kappa| below degeneracy threshold");
    }
    const cplx eta = principal_power(cplx(k) / kappa, alpha.value() - 1.0);
    const cplx eta2 = eta * eta;
    return {eta, 0.5 * (eta2 + 1.0) / eta, 0.5 * (eta2 - 1.0) / eta};
}

} // namespace fsqm
