#pragma once

#include "fsqm/fractional_medium.hpp"
#include "fsqm/locus_core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fsqm {

/// Windows and tolerances shared by every solver entry point.
struct SolverConfig {
    double rho_min = -2.0;
    double rho_max = 0.995;
    double sigma_min = 1e-4; ///< |sigma| below this is never reported
    double sigma_max = 20.0;
    int scan_steps = 2048;   ///< sigma samples per column
    int resolution = 200;    ///< rho columns per trace
    double root_tol = kDefaultRootTol;
    double trace_tol = 1e-8;  ///< relative residual accepted for a locus point
    double oracle_tol = 1e-7; ///< relative |M22| (or |M11|) at reconstruction
    double asymptote_threshold = 100.0;

    /// Throws DomainError on non-positive tolerances or inverted windows.
    void validate() const;
};

struct LocusPoint {
    double rho = 0.0;
    double sigma = 0.0;
    int n = 0;
    Branch branch = Branch::Minus;
    LocusKind kind = LocusKind::SS;
    double H = 0.0;
    double residual_rel = 0.0;
};

/// A scalar root that did not survive residual validation.
struct LocusAnomaly {
    double rho = 0.0;
    double sigma = 0.0;
    double residual_rel = 0.0;
    std::string reason;
};

/// Signed sigma interval [lo, hi] on one side of the real axis.
struct SigmaWindow {
    double lo;
    double hi;
};

SigmaWindow default_window(LocusKind kind, const SolverConfig& config);

/// All validated roots of the kind's scalar along the vertical line at rho,
/// ascending in sigma. Rejected roots are appended to `anomalies`.
std::vector<LocusPoint> solve_sigma_at_rho(double rho, LevyIndex alpha, int n, Branch branch, LocusKind kind,
                                           SigmaWindow window, int steps, const SolverConfig& config,
                                           std::vector<LocusAnomaly>* anomalies = nullptr);

struct TraceMeta {
    double alpha = 2.0;
    int n = 0;
    Branch branch = Branch::Minus;
    LocusKind kind = LocusKind::SS;
    double rho_min = 0.0;
    double rho_max = 0.0;
    int resolution = 0;
    SigmaWindow window{0.0, 0.0};
    int scan_steps = 0;
    double root_tol = 0.0;
    double trace_tol = 0.0;
    std::vector<int> empty_columns;
    std::vector<int> multi_root_columns;
    /// Inclusive column ranges of contiguous non-empty columns.
    std::vector<std::pair<int, int>> segments;
    bool partial = false; ///< more than half of the columns are empty
};

struct CurveTrace {
    std::vector<LocusPoint> points; ///< one per non-empty column, ascending rho
    std::vector<LocusPoint> extra_points; ///< further roots on multi-root columns
    std::vector<LocusAnomaly> anomalies;
    TraceMeta meta;
};

/// rho_i = rho_min + i (rho_max - rho_min) / (resolution - 1).
std::vector<double> rho_grid(double rho_min, double rho_max, int resolution);

/// Column-by-column trace over config.rho_min..rho_max with config.resolution columns.
CurveTrace trace_curve(LevyIndex alpha, int n, Branch branch, LocusKind kind, const SolverConfig& config);

/// rho at which the locus first rises above config.asymptote_threshold in |sigma|
/// (or leaves the window), refined by bisection. nullopt if the curve never does.
std::optional<double> estimate_asymptote(LevyIndex alpha, int n, Branch branch, LocusKind kind,
                                         const SolverConfig& config);

/// Intersection of the ray sigma = ratio * rho with the locus.
LocusPoint ray_intersect(double ratio, LevyIndex alpha, int n, LocusKind kind, const SolverConfig& config,
                         Branch branch = Branch::Minus);

struct PhysicalPoint {
    double energy = 0.0;
    double v_r = 0.0;
    double v_i = 0.0;
    double d = 0.0;
    double alpha = 2.0;
    int n = 0;
    LocusKind kind = LocusKind::SS;
    double oracle_rel = 0.0; ///< |M22|/(|M11|+1) for SS, |M11|/(|M22|+1) for CPA
};

/// Relative magnitude of the vanishing transfer-matrix element.
double oracle_residual(double energy, const BarrierSpec& barrier, LevyIndex alpha, const UnitSystem& units,
                       LocusKind kind);

/// E = D_alpha hbar^alpha (H/d)^alpha, V = E (rho + i sigma), then the
/// transfer-matrix check. Throws OracleError if it fails.
PhysicalPoint to_physical(const LocusPoint& point, LevyIndex alpha, double d, const UnitSystem& units,
                          const SolverConfig& config);

struct BlueShiftRow {
    double alpha = 2.0;
    double rho = 0.0;
    double sigma = 0.0;
    double H = 0.0;
    double energy = 0.0;      ///< E_ss at the fixed reference (V_r, V_i)
    double v_r = 0.0;
    double v_i = 0.0;
    double d_implied = 0.0;   ///< half-width that places the SS at (V_r, V_i)
    double energy_fixed_d = 0.0; ///< D_alpha hbar^alpha (H/d)^alpha at the input d
    double oracle_rel = 0.0;
    std::optional<std::string> error;
};

/// Per-alpha ray intersection. The first row that solves fixes (V_r, V_i)
/// through to_physical at half-width d; every row then reports the SS energy
/// V_r / rho* for those strengths and the half-width it implies.
/// `alphas` must be strictly descending.
std::vector<BlueShiftRow> blue_shift_scan(double ratio, int n, const std::vector<double>& alphas, double d,
                                          const UnitSystem& units, const SolverConfig& config,
                                          LocusKind kind = LocusKind::SS);

enum class Verdict { Pass, Fail, NotApplicable, Withheld };
std::string to_string(Verdict verdict);

/// Pass when energy strictly increases down the table.
Verdict blue_shift_verdict(const std::vector<BlueShiftRow>& rows);

struct SurveyGrid {
    double rho_min = -1.0;
    double rho_max = 0.95;
    double sigma_min = 0.01; ///< magnitude; the sign follows the kind
    double sigma_max = 2.0;
    int rho_points = 50;
    int sigma_points = 50;
};

inline constexpr double kAdmissibilityThreshold = 1e-5;
inline constexpr int kLowResolutionPoints = 16;

struct SurveyEntry {
    int n = 0;
    Branch branch = Branch::Minus;
    LocusKind kind = LocusKind::SS;
    double grid_min_rel = 0.0;
    double grid_rho = 0.0;
    double grid_sigma = 0.0;
    std::optional<double> root_min_rel; ///< best refined scalar root with H > 0
    double root_rho = 0.0;
    double root_sigma = 0.0;
    int validated_roots = 0;
    bool admits_zeros = false;
    bool anomaly = false; ///< grid minimum below threshold with no scalar root explaining it
};

struct SurveyReport {
    double alpha = 2.0;
    SurveyGrid grid;
    bool low_resolution = false;
    std::vector<SurveyEntry> entries;
};

SurveyReport branch_survey(const SurveyGrid& grid, LevyIndex alpha, int n_min, int n_max,
                           const std::vector<LocusKind>& kinds, const std::vector<Branch>& branches,
                           const SolverConfig& config);

} // namespace fsqm
