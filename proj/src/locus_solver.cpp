#include "fsqm/locus_solver.hpp"

#include "fsqm/errors.hpp"
#include "fsqm/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fsqm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

/// Locus scalar with domain failures mapped to NaN so scans skip them.
double scalar_or_nan(double rho, double sigma, LevyIndex alpha, int n, Branch branch, LocusKind kind)
{
    try {
        return locus_scalar({rho, sigma, alpha, n, branch}, kind);
    } catch (const DomainError&) {
        return kNaN;
    }
}

const LocusPoint& closest_to(const std::vector<LocusPoint>& roots, double sigma)
{
    return *std::min_element(roots.begin(), roots.end(), [sigma](const LocusPoint& a, const LocusPoint& b) {
        return std::abs(a.sigma - sigma) < std::abs(b.sigma - sigma);
    });
}

} // namespace

void SolverConfig::validate() const
{
    if (!(rho_min < rho_max)) throw DomainError("solver: empty rho range");
    if (!(sigma_min > 0.0) || !(sigma_min < sigma_max)) throw DomainError("solver: invalid sigma window");
    if (scan_steps < 16) throw DomainError("solver: scan_steps must be >= 16");
    if (resolution < 2) throw DomainError("solver: resolution must be >= 2");
    if (!(root_tol > 0.0) || !(trace_tol > 0.0) || !(oracle_tol > 0.0) || !(asymptote_threshold > 0.0)) {
        throw DomainError("solver: tolerances must be positive");
    }
}

SigmaWindow default_window(LocusKind kind, const SolverConfig& config)
{
    if (kind == LocusKind::SS) return {config.sigma_min, config.sigma_max};
    return {-config.sigma_max, -config.sigma_min};
}

std::vector<LocusPoint> solve_sigma_at_rho(double rho, LevyIndex alpha, int n, Branch branch, LocusKind kind,
                                           SigmaWindow window, int steps, const SolverConfig& config,
                                           std::vector<LocusAnomaly>* anomalies)
{
    if (steps < 16) throw DomainError("solve_sigma_at_rho: steps must be >= 16");
    if (!(window.lo < window.hi)) throw DomainError("solve_sigma_at_rho: empty sigma window");
    const bool upper = window.lo > 0.0;
    if (!upper && !(window.hi < 0.0)) {
        throw DomainError("solve_sigma_at_rho: sigma window must not straddle sigma = 0");
    }
    const double sign = upper ? 1.0 : -1.0;
    const double mag_lo = upper ? window.lo : -window.hi;
    const double mag_hi = upper ? window.hi : -window.lo;
    if (mag_lo < config.sigma_min) {
        throw DomainError("solve_sigma_at_rho: window reaches into |sigma| < sigma_min");
    }

    // Scan |sigma| so that mirrored windows sample mirrored points.
    auto f = [&](double mag) { return scalar_or_nan(rho, sign * mag, alpha, n, branch, kind); };

    std::vector<LocusPoint> out;
    for (const Bracket& b : bracket_scan(f, mag_lo, mag_hi, steps)) {
        double mag = 0.0;
        try {
            mag = refine_root(f, b, config.root_tol);
        } catch (const ConvergenceError& e) {
            if (anomalies) anomalies->push_back({rho, sign * 0.5 * (b.lo + b.hi), kNaN, e.what()});
            continue;
        }
        const double sigma = sign * mag;
        try {
            const LocusKernel k = evaluate_kernel({rho, sigma, alpha, n, branch}, kind);
            if (k.H > 0.0 && k.residual_rel < config.trace_tol) {
                out.push_back({rho, sigma, n, branch, kind, k.H, k.residual_rel});
            } else if (anomalies) {
                anomalies->push_back({rho, sigma, k.residual_rel,
                                      k.H > 0.0 ? "scalar root failed residual validation"
                                                : "scalar root with non-positive k_alpha d"});
            }
        } catch (const DomainError& e) {
            if (anomalies) anomalies->push_back({rho, sigma, kNaN, e.what()});
        }
    }
    std::sort(out.begin(), out.end(), [](const LocusPoint& a, const LocusPoint& b) { return a.sigma < b.sigma; });
    return out;
}

std::vector<double> rho_grid(double rho_min, double rho_max, int resolution)
{
    if (resolution < 2 || !(rho_min < rho_max)) throw DomainError("rho_grid: need resolution >= 2 and min < max");
    std::vector<double> grid(static_cast<std::size_t>(resolution));
    const double step = (rho_max - rho_min) / (resolution - 1);
    for (int i = 0; i < resolution; ++i) grid[static_cast<std::size_t>(i)] = rho_min + i * step;
    grid.back() = rho_max;
    return grid;
}

CurveTrace trace_curve(LevyIndex alpha, int n, Branch branch, LocusKind kind, const SolverConfig& config)
{
    config.validate();
    if (config.rho_min < -5.0 || config.rho_max > 1.0 - 1e-3) {
        throw DomainError("trace_curve: rho range must lie within [-5, 0.999]");
    }
    CurveTrace trace;
    TraceMeta& meta = trace.meta;
    meta.alpha = alpha.value();
    meta.n = n;
    meta.branch = branch;
    meta.kind = kind;
    meta.rho_min = config.rho_min;
    meta.rho_max = config.rho_max;
    meta.resolution = config.resolution;
    meta.window = default_window(kind, config);
    meta.scan_steps = config.scan_steps;
    meta.root_tol = config.root_tol;
    meta.trace_tol = config.trace_tol;

    const std::vector<double> grid = rho_grid(config.rho_min, config.rho_max, config.resolution);
    std::optional<double> previous_sigma;
    int segment_start = -1;
    for (int i = 0; i < config.resolution; ++i) {
        auto roots = solve_sigma_at_rho(grid[static_cast<std::size_t>(i)], alpha, n, branch, kind, meta.window,
                                        config.scan_steps, config, &trace.anomalies);
        if (roots.empty()) {
            meta.empty_columns.push_back(i);
            if (segment_start >= 0) meta.segments.emplace_back(segment_start, i - 1);
            segment_start = -1;
            previous_sigma.reset();
            continue;
        }
        if (segment_start < 0) segment_start = i;
        const LocusPoint* chosen = &roots.front();
        if (roots.size() > 1) {
            meta.multi_root_columns.push_back(i);
            chosen = previous_sigma ? &closest_to(roots, *previous_sigma) : &closest_to(roots, 0.0);
            for (const LocusPoint& p : roots) {
                if (&p != chosen) trace.extra_points.push_back(p);
            }
        }
        trace.points.push_back(*chosen);
        previous_sigma = chosen->sigma;
    }
    if (segment_start >= 0) meta.segments.emplace_back(segment_start, config.resolution - 1);
    meta.partial = 2 * meta.empty_columns.size() > static_cast<std::size_t>(config.resolution);
    return trace;
}

std::optional<double> estimate_asymptote(LevyIndex alpha, int n, Branch branch, LocusKind kind,
                                         const SolverConfig& config)
{
    config.validate();
    const double sign = kind == LocusKind::SS ? 1.0 : -1.0;
    const double cap = config.asymptote_threshold;
    const SigmaWindow window = sign > 0 ? SigmaWindow{config.sigma_min, cap} : SigmaWindow{-cap, -config.sigma_min};
    auto below = [&](double rho) {
        return !solve_sigma_at_rho(rho, alpha, n, branch, kind, window, config.scan_steps, config).empty();
    };

    const std::vector<double> grid = rho_grid(config.rho_min, config.rho_max, config.resolution);
    bool prev_below = below(grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const bool now_below = below(grid[i]);
        if (!prev_below && now_below) {
            double lo = grid[i - 1];
            double hi = grid[i];
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                (below(mid) ? hi : lo) = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_below = now_below;
    }
    return std::nullopt;
}

LocusPoint ray_intersect(double ratio, LevyIndex alpha, int n, LocusKind kind, const SolverConfig& config,
                         Branch branch)
{
    config.validate();
    if (ratio == 0.0 || !std::isfinite(ratio)) throw DomainError("ray_intersect: ratio must be finite and non-zero");
    if (kind == LocusKind::SS && ratio < 0.0) {
        throw DomainError("ray_intersect: spectral singularities need gain (ratio > 0)");
    }
    const SigmaWindow window = default_window(kind, config);
    auto locus_roots = [&](double rho) {
        return solve_sigma_at_rho(rho, alpha, n, branch, kind, window, config.scan_steps, config);
    };
    auto gap = [&](double rho) {
        const auto roots = locus_roots(rho);
        if (roots.empty()) return kNaN;
        return closest_to(roots, ratio * rho).sigma - ratio * rho;
    };

    const auto brackets = bracket_scan(gap, config.rho_min, config.rho_max, config.resolution - 1);
    if (brackets.empty()) {
        throw NoIntersectionError("ray_intersect: ray sigma = " + fmt(ratio) + " rho does not cross the " +
                                  to_string(kind) + " locus (alpha=" + fmt(alpha.value()) + ", n=" +
                                  std::to_string(n) + ") for rho in [" + fmt(config.rho_min) + ", " +
                                  fmt(config.rho_max) + "]");
    }
    const double rho = refine_root(gap, brackets.front(), config.root_tol);
    const auto roots = locus_roots(rho);
    if (roots.empty()) throw NoIntersectionError("ray_intersect: locus vanished at the refined crossing");
    return closest_to(roots, ratio * rho);
}

double oracle_residual(double energy, const BarrierSpec& barrier, LevyIndex alpha, const UnitSystem& units,
                       LocusKind kind)
{
    const TransferMatrix m = transfer_matrix(energy, barrier, alpha, units);
    if (kind == LocusKind::SS) return std::abs(m.m22) / (std::abs(m.m11) + 1.0);
    return std::abs(m.m11) / (std::abs(m.m22) + 1.0);
}

PhysicalPoint to_physical(const LocusPoint& point, LevyIndex alpha, double d, const UnitSystem& units,
                          const SolverConfig& config)
{
    if (!(d > 0.0)) throw DomainError("to_physical: half-width must be positive");
    if (!(point.H > 0.0)) throw DomainError("to_physical: locus point has non-positive k_alpha d");
    const double a = alpha.value();
    PhysicalPoint out;
    out.energy = diffusion_coefficient(units, alpha) * std::pow(units.hbar(), a) * std::pow(point.H / d, a);
    out.v_r = point.rho * out.energy;
    out.v_i = point.sigma * out.energy;
    out.d = d;
    out.alpha = a;
    out.n = point.n;
    out.kind = point.kind;
    out.oracle_rel = oracle_residual(out.energy, BarrierSpec(out.v_r, out.v_i, d), alpha, units, point.kind);
    if (!(out.oracle_rel < config.oracle_tol)) {
        throw OracleError("to_physical: transfer-matrix check failed at (rho, sigma) = (" + fmt(point.rho) + ", " +
                          fmt(point.sigma) + "), relative residual " + fmt(out.oracle_rel));
    }
    return out;
}

std::vector<BlueShiftRow> blue_shift_scan(double ratio, int n, const std::vector<double>& alphas, double d,
                                          const UnitSystem& units, const SolverConfig& config, LocusKind kind)
{
    if (alphas.empty()) throw DomainError("blue_shift_scan: empty alpha list");
    for (std::size_t i = 1; i < alphas.size(); ++i) {
        if (!(alphas[i] < alphas[i - 1])) throw DomainError("blue_shift_scan: alphas must be strictly descending");
    }
    if (!(d > 0.0)) throw DomainError("blue_shift_scan: half-width must be positive");
    if (kind == LocusKind::SS && !(ratio > 0.0)) {
        throw DomainError("blue_shift_scan: spectral singularities need gain (ratio > 0)");
    }

    std::vector<BlueShiftRow> rows;
    std::vector<LocusPoint> points;
    for (double a : alphas) {
        BlueShiftRow row;
        row.alpha = a;
        row.rho = row.sigma = row.H = row.energy = row.v_r = row.v_i = kNaN;
        row.d_implied = row.energy_fixed_d = row.oracle_rel = kNaN;
        LocusPoint p;
        try {
            const LevyIndex alpha(a);
            p = ray_intersect(ratio, alpha, n, kind, config);
            row.rho = p.rho;
            row.sigma = p.sigma;
            row.H = p.H;
            row.energy_fixed_d = diffusion_coefficient(units, alpha) * std::pow(units.hbar(), a) * std::pow(p.H / d, a);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(row);
        points.push_back(p);
    }

    // Strengths |V| fixed by the first row that solved, at half-width d.
    std::optional<double> strength;
    for (std::size_t i = 0; i < rows.size() && !strength; ++i) {
        if (rows[i].error) continue;
        try {
            const PhysicalPoint ref = to_physical(points[i], LevyIndex(rows[i].alpha), d, units, config);
            strength = std::hypot(ref.v_r, ref.v_i);
        } catch (const std::exception& e) {
            rows[i].error = e.what();
        }
    }
    if (!strength) return rows;

    for (BlueShiftRow& row : rows) {
        if (row.error) continue;
        try {
            const LevyIndex alpha(row.alpha);
            row.energy = *strength / std::hypot(row.rho, row.sigma);
            row.v_r = row.rho * row.energy;
            row.v_i = row.sigma * row.energy;
            row.d_implied = row.H / k_alpha(row.energy, alpha, units);
            row.oracle_rel =
                oracle_residual(row.energy, BarrierSpec(row.v_r, row.v_i, row.d_implied), alpha, units, kind);
            if (!(row.oracle_rel < config.oracle_tol)) {
                throw OracleError("blue_shift_scan: transfer-matrix check failed, relative residual " +
                                  fmt(row.oracle_rel));
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    }
    return rows;
}

std::string to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotApplicable: return "N/A";
    case Verdict::Withheld: return "WITHHELD";
    }
    return "WITHHELD";
}

Verdict blue_shift_verdict(const std::vector<BlueShiftRow>& rows)
{
    for (const auto& r : rows) {
        if (r.error) return Verdict::Withheld;
    }
    if (rows.size() < 2) return Verdict::NotApplicable;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].energy > rows[i - 1].energy)) return Verdict::Fail;
    }
    return Verdict::Pass;
}

SurveyReport branch_survey(const SurveyGrid& grid, LevyIndex alpha, int n_min, int n_max,
                           const std::vector<LocusKind>& kinds, const std::vector<Branch>& branches,
                           const SolverConfig& config)
{
    if (n_min > n_max) throw DomainError("branch_survey: n_min > n_max");
    if (grid.rho_points < 2 || grid.sigma_points < 2 || !(grid.rho_min < grid.rho_max) ||
        !(grid.sigma_min > 0.0) || !(grid.sigma_min < grid.sigma_max)) {
        throw DomainError("branch_survey: invalid grid");
    }
    SurveyReport report;
    report.alpha = alpha.value();
    report.grid = grid;
    report.low_resolution = grid.rho_points < kLowResolutionPoints || grid.sigma_points < kLowResolutionPoints;

    const std::vector<double> rhos = rho_grid(grid.rho_min, grid.rho_max, grid.rho_points);
    const std::vector<double> mags = rho_grid(grid.sigma_min, grid.sigma_max, grid.sigma_points);

    for (int n = n_min; n <= n_max; ++n) {
        for (Branch branch : branches) {
            for (LocusKind kind : kinds) {
                const double sign = kind == LocusKind::SS ? 1.0 : -1.0;
                SurveyEntry e;
                e.n = n;
                e.branch = branch;
                e.kind = kind;
                e.grid_min_rel = std::numeric_limits<double>::infinity();
                e.grid_rho = e.grid_sigma = kNaN;
                for (double rho : rhos) {
                    for (double mag : mags) {
                        try {
                            const LocusKernel k = evaluate_kernel({rho, sign * mag, alpha, n, branch}, kind);
                            if (k.H > 0.0 && k.residual_rel < e.grid_min_rel) {
                                e.grid_min_rel = k.residual_rel;
                                e.grid_rho = rho;
                                e.grid_sigma = sign * mag;
                            }
                        } catch (const DomainError&) {
                        }
                    }
                    auto f = [&](double m) { return scalar_or_nan(rho, sign * m, alpha, n, branch, kind); };
                    for (const Bracket& b : bracket_scan(f, grid.sigma_min, grid.sigma_max, grid.sigma_points - 1)) {
                        try {
                            const double sigma = sign * refine_root(f, b, config.root_tol);
                            const LocusKernel k = evaluate_kernel({rho, sigma, alpha, n, branch}, kind);
                            if (!(k.H > 0.0)) continue;
                            if (k.residual_rel < kAdmissibilityThreshold) ++e.validated_roots;
                            if (!e.root_min_rel || k.residual_rel < *e.root_min_rel) {
                                e.root_min_rel = k.residual_rel;
                                e.root_rho = rho;
                                e.root_sigma = sigma;
                            }
                        } catch (const std::exception&) {
                        }
                    }
                }
                const bool grid_hit = e.grid_min_rel < kAdmissibilityThreshold;
                const bool root_hit = e.root_min_rel && *e.root_min_rel < kAdmissibilityThreshold;
                e.admits_zeros = grid_hit || root_hit;
                e.anomaly = grid_hit && !root_hit;
                report.entries.push_back(e);
            }
        }
    }
    return report;
}

} // namespace fsqm
