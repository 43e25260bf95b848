#include "fsqm/cli/commands.hpp"

#include "fsqm/errors.hpp"
#include "fsqm/scattering.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>

#ifndef FSQM_VERSION
#define FSQM_VERSION "0.0.0"
#endif

namespace fsqm::cli {

using nlohmann::json;

const char* tool_version() { return FSQM_VERSION; }

std::string to_string(Format f)
{
    switch (f) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::Svg: return "svg";
    }
    return "csv";
}

Format format_from_string(const std::string& name)
{
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "svg") return Format::Svg;
    throw UsageError("unknown format '" + name + "' (expected csv, json or svg)");
}

UnitSystem UnitsConfig::make() const
{
    if (mode == UnitMode::Natural) return UnitSystem::natural(u);
    return UnitSystem::physical(hbar, mass, u);
}

std::string command_name(const CommandArgs& args)
{
    static const char* const names[] = {"scatter", "trace", "blueshift", "survey"};
    return names[args.index()];
}

void apply_recipe(TraceArgs& args, const std::string& recipe)
{
    const std::vector<double> fig2_alphas{2.0, 1.8, 1.5};
    if (recipe == "fig1a" || recipe == "fig1b") {
        args.kind = LocusKind::SS;
        args.alphas = {recipe == "fig1a" ? 2.0 : 1.000005};
        args.ns = {1, 2, 3, 4, 5};
        args.asymptote = true;
    } else if (recipe == "fig2a" || recipe == "fig2b" || recipe == "fig2c" || recipe == "fig2d") {
        args.kind = (recipe == "fig2a" || recipe == "fig2b") ? LocusKind::SS : LocusKind::CPA;
        args.alphas = fig2_alphas;
        args.ns = {(recipe == "fig2a" || recipe == "fig2c") ? 2 : 3};
    } else {
        throw UsageError("unknown recipe '" + recipe + "' (expected fig1a, fig1b, fig2a, fig2b, fig2c or fig2d)");
    }
    args.recipe = recipe;
}

namespace {

json anomaly(const std::string& source, const std::string& message)
{
    return {{"source", source}, {"message", message}};
}

json number_or_string(double x)
{
    if (std::isfinite(x)) return x;
    return format_number(x);
}

std::string label_for(double alpha, int n, std::optional<Branch> branch = std::nullopt)
{
    std::string s = "alpha=" + format_number(alpha) + ", n=" + std::to_string(n);
    if (branch) s += " (" + to_string(*branch) + ")";
    return s;
}

std::vector<double> linspace(double lo, double hi, int points)
{
    if (points == 1) return {lo};
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
    v.back() = hi;
    return v;
}

// ---------------------------------------------------------------- scatter

RunResult run_scatter(const RunConfig& config, const ScatterArgs& a)
{
    if (!(a.d > 0.0)) throw UsageError("--d must be positive");
    if (!(a.emin > 0.0) || !(a.emax >= a.emin)) throw UsageError("need 0 < --emin <= --emax");
    if (a.points < 1) throw UsageError("--points must be >= 1");
    if (a.points > 1 && a.emax == a.emin) throw UsageError("--emin == --emax needs --points 1");
    const LevyIndex alpha(a.alpha);
    const BarrierSpec barrier(a.vr, a.vi, a.d);
    const UnitSystem units = config.units.make();

    RunResult r;
    r.command = "scatter";
    r.basename = "scatter";
    Table t{"coefficients", {"energy", "T", "R_left", "R_right", "spectral_singularity", "error"}, {}};
    Series ts{"T", {{}}};
    Series rs{"R_left", {{}}};
    int errors = 0;
    int singular = 0;
    for (const CoefficientRow& row : scan_coefficients(linspace(a.emin, a.emax, a.points), barrier, alpha, units)) {
        Cell err = row.error ? Cell{*row.error} : Cell{};
        t.add_row({row.energy, row.T, row.R_left, row.R_right, row.spectral_singularity, err});
        if (row.error) {
            ++errors;
            r.anomalies.push_back(anomaly("scatter", "E=" + format_number(row.energy) + ": " + *row.error));
            ts.polylines.emplace_back();
            rs.polylines.emplace_back();
            continue;
        }
        if (row.spectral_singularity) ++singular;
        ts.polylines.back().emplace_back(row.energy, row.T);
        rs.polylines.back().emplace_back(row.energy, row.R_left);
    }
    r.tables.push_back(std::move(t));
    r.summary = {{"rows", a.points}, {"row_errors", errors}, {"spectral_singularity_rows", singular}};
    r.plot = Plot{"Transmission and reflection, alpha=" + format_number(a.alpha), "E", "coefficient", {ts, rs}, false};
    if (errors > 0) r.exit_code = kExitPartial;
    return r;
}

// ------------------------------------------------------------------ trace

RunResult run_trace(const RunConfig& config, const TraceArgs& a)
{
    if (a.alphas.empty() || a.ns.empty()) throw UsageError("trace needs at least one --alpha and one --n");
    std::vector<LevyIndex> alphas;
    for (double x : a.alphas) alphas.emplace_back(x);
    SolverConfig solver = config.solver;
    const double lo = std::max(solver.rho_min, -5.0);
    const double hi = std::min(solver.rho_max, 1.0 - 1e-3);
    if (!(lo < hi)) {
        throw UsageError("rho range [" + format_number(solver.rho_min) + ", " + format_number(solver.rho_max) +
                         "] does not intersect the traceable range [-5, 0.999]");
    }
    RunResult r;
    r.command = "trace";
    r.basename = a.recipe.value_or("trace");
    if (lo != solver.rho_min || hi != solver.rho_max) {
        r.anomalies.push_back(anomaly("trace", "rho range clipped to [" + format_number(lo) + ", " +
                                                   format_number(hi) + "]"));
    }
    solver.rho_min = lo;
    solver.rho_max = hi;
    solver.validate();
    const UnitSystem units = config.units.make();

    const std::vector<std::string> point_cols{"alpha", "n", "branch", "kind", "column", "rho", "sigma", "H",
                                              "residual_rel", "oracle_rel"};
    Table points{"points", point_cols, {}};
    Table extra{"extra_points", point_cols, {}};
    Table curves{"curves",
                 {"alpha", "n", "branch", "kind", "points", "extra_points", "empty_columns", "multi_root_columns",
                  "segments", "partial", "asymptote_rho"},
                 {}};

    std::vector<Branch> branches{Branch::Minus};
    if (a.all_branches) branches.push_back(Branch::Plus);

    const std::vector<double> grid = rho_grid(solver.rho_min, solver.rho_max, solver.resolution);
    auto column_of = [&](double rho) {
        auto it = std::lower_bound(grid.begin(), grid.end(), rho);
        return static_cast<long long>(it - grid.begin());
    };

    bool empty_curve = false;
    bool oracle_failed = false;
    Plot plot{(a.kind == LocusKind::SS ? std::string("SS") : std::string("CPA")) + " loci" + (a.recipe ? " (" + *a.recipe + ")" : std::string{}), "rho = V_r/E",
              "sigma = V_i/E", {}, true};

    for (const LevyIndex& alpha : alphas) {
        for (int n : a.ns) {
            for (Branch branch : branches) {
                const std::string label =
                    label_for(alpha.value(), n, a.all_branches ? std::optional<Branch>(branch) : std::nullopt);
                const CurveTrace trace = trace_curve(alpha, n, branch, a.kind, solver);
                auto emit = [&](Table& table, const LocusPoint& p) {
                    double oracle = std::nan("");
                    try {
                        oracle = to_physical(p, alpha, 1.0, units, solver).oracle_rel;
                    } catch (const OracleError& e) {
                        oracle_failed = true;
                        r.anomalies.push_back(anomaly("trace " + label, e.what()));
                    }
                    table.add_row({alpha.value(), static_cast<long long>(n), to_string(branch), to_string(a.kind),
                                   column_of(p.rho), p.rho, p.sigma, p.H, p.residual_rel, oracle});
                };
                for (const auto& p : trace.points) emit(points, p);
                for (const auto& p : trace.extra_points) emit(extra, p);
                for (const auto& an : trace.anomalies) {
                    json j = anomaly("trace " + label, an.reason);
                    j["rho"] = an.rho;
                    j["sigma"] = number_or_string(an.sigma);
                    j["residual_rel"] = number_or_string(an.residual_rel);
                    r.anomalies.push_back(std::move(j));
                }
                const TraceMeta& m = trace.meta;
                if (trace.points.empty()) {
                    empty_curve = true;
                    r.anomalies.push_back(anomaly("trace " + label, "no locus points in the traced window"));
                } else if (m.partial) {
                    r.anomalies.push_back(anomaly("trace " + label,
                                                  "partial trace: " + std::to_string(m.empty_columns.size()) + " of " +
                                                      std::to_string(m.resolution) + " columns empty"));
                }
                Cell asym{};
                if (a.asymptote) {
                    if (auto x = estimate_asymptote(alpha, n, branch, a.kind, solver)) asym = *x;
                }
                curves.add_row({alpha.value(), static_cast<long long>(n), to_string(branch), to_string(a.kind),
                                static_cast<long long>(trace.points.size()),
                                static_cast<long long>(trace.extra_points.size()),
                                static_cast<long long>(m.empty_columns.size()),
                                static_cast<long long>(m.multi_root_columns.size()),
                                static_cast<long long>(m.segments.size()), m.partial, asym});

                Series s{label, {}};
                std::size_t k = 0;
                for (auto [c0, c1] : m.segments) {
                    auto& line = s.polylines.emplace_back();
                    for (int c = c0; c <= c1 && k < trace.points.size(); ++c, ++k) {
                        line.emplace_back(trace.points[k].rho, trace.points[k].sigma);
                    }
                }
                plot.series.push_back(std::move(s));
            }
        }
    }
    r.summary = {{"curves", curves.rows.size()}, {"points", points.rows.size()},
                 {"extra_points", extra.rows.size()}};
    r.tables.push_back(std::move(curves));
    r.tables.push_back(std::move(points));
    r.tables.push_back(std::move(extra));
    r.plot = std::move(plot);
    if (oracle_failed) r.exit_code = kExitNumerical;
    else if (empty_curve) r.exit_code = kExitPartial;
    return r;
}

// -------------------------------------------------------------- blueshift

Verdict fixed_d_verdict(const std::vector<BlueShiftRow>& rows)
{
    for (const auto& row : rows) {
        if (row.error) return Verdict::Withheld;
    }
    if (rows.size() < 2) return Verdict::NotApplicable;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].energy_fixed_d > rows[i - 1].energy_fixed_d)) return Verdict::Fail;
    }
    return Verdict::Pass;
}

RunResult run_blueshift(const RunConfig& config, const BlueshiftArgs& a)
{
    if (a.kind == LocusKind::SS && !(a.ratio > 0.0)) {
        throw UsageError("--ratio must be positive for ss: spectral singularities need gain (sigma > 0)");
    }
    if (a.ratio == 0.0) throw UsageError("--ratio must be non-zero");
    if (!(a.d > 0.0)) throw UsageError("--d must be positive");
    if (a.alphas.empty()) throw UsageError("--alphas needs at least one value");
    for (std::size_t i = 1; i < a.alphas.size(); ++i) {
        if (!(a.alphas[i] < a.alphas[i - 1])) throw UsageError("--alphas must be strictly descending");
    }
    for (double x : a.alphas) (void)LevyIndex(x);
    config.solver.validate();

    const auto rows = blue_shift_scan(a.ratio, a.n, a.alphas, a.d, config.units.make(), config.solver, a.kind);
    RunResult r;
    r.command = "blueshift";
    r.basename = "blueshift";
    Table t{"blueshift",
            {"alpha", "rho", "sigma", "H", "E", "V_r", "V_i", "d_implied", "E_fixed_d", "oracle_rel", "error"},
            {}};
    Series e{"E at fixed (V_r, V_i)", {{}}};
    Series f{"E at fixed d", {{}}};
    int missing = 0;
    for (const auto& row : rows) {
        t.add_row({row.alpha, row.rho, row.sigma, row.H, row.energy, row.v_r, row.v_i, row.d_implied,
                   row.energy_fixed_d, row.oracle_rel, row.error ? Cell{*row.error} : Cell{}});
        if (row.error) {
            ++missing;
            r.anomalies.push_back(anomaly("blueshift", "alpha=" + format_number(row.alpha) + ": " + *row.error));
            continue;
        }
        e.polylines.back().emplace_back(row.alpha, row.energy);
        f.polylines.back().emplace_back(row.alpha, row.energy_fixed_d);
    }
    r.tables.push_back(std::move(t));
    const Verdict v = blue_shift_verdict(rows);
    r.summary = {{"verdict", to_string(v)},
                 {"verdict_fixed_d", to_string(fixed_d_verdict(rows))},
                 {"missing_rows", missing}};
    r.plot = Plot{(a.kind == LocusKind::SS ? std::string("SS") : std::string("CPA")) + " energy vs alpha (ratio " + format_number(a.ratio) + ", n=" +
                      std::to_string(a.n) + ")",
                  "alpha", "E", {e, f}, false};
    if (missing > 0) r.exit_code = kExitPartial;
    return r;
}

// ----------------------------------------------------------------- survey

RunResult run_survey(const RunConfig& config, const SurveyArgs& a)
{
    if (a.n_min > a.n_max) throw UsageError("--n-min must not exceed --n-max");
    const SurveyGrid& g = a.grid;
    if (g.rho_points < 2 || g.sigma_points < 2) throw UsageError("--grid needs at least 2 points per axis");
    if (!(g.rho_min < g.rho_max)) throw UsageError("empty survey rho range");
    if (!(g.sigma_min > 0.0) || !(g.sigma_min < g.sigma_max)) {
        throw UsageError("survey sigma range must satisfy 0 < min < max (magnitudes)");
    }
    if (a.kinds.empty()) throw UsageError("survey needs at least one kind");
    const LevyIndex alpha(a.alpha);
    config.solver.validate();

    const SurveyReport rep =
        branch_survey(g, alpha, a.n_min, a.n_max, a.kinds, {Branch::Minus, Branch::Plus}, config.solver);
    RunResult r;
    r.command = "survey";
    r.basename = "survey";
    Table t{"survey",
            {"n", "branch", "kind", "grid_min_rel", "grid_rho", "grid_sigma", "root_min_rel", "root_rho",
             "root_sigma", "validated_roots", "classification", "anomaly"},
            {}};
    for (const SurveyEntry& e : rep.entries) {
        Cell root_min{};
        Cell root_rho{};
        Cell root_sigma{};
        if (e.root_min_rel) {
            root_min = *e.root_min_rel;
            root_rho = e.root_rho;
            root_sigma = e.root_sigma;
        }
        t.add_row({static_cast<long long>(e.n), to_string(e.branch), to_string(e.kind), e.grid_min_rel, e.grid_rho,
                   e.grid_sigma, root_min, root_rho, root_sigma, static_cast<long long>(e.validated_roots),
                   std::string(e.admits_zeros ? "admits-zeros" : "excluded"), e.anomaly});
        if (e.anomaly) {
            r.anomalies.push_back(anomaly("survey", "n=" + std::to_string(e.n) + " " + to_string(e.branch) + " " +
                                                        to_string(e.kind) +
                                                        ": grid minimum below threshold without a refined root"));
        }
    }
    if (rep.low_resolution) {
        r.anomalies.push_back(anomaly("survey", "low-resolution grid: minima are coarse"));
    }
    r.tables.push_back(std::move(t));
    r.summary = {{"alpha", rep.alpha}, {"low_resolution", rep.low_resolution},
                 {"threshold", kAdmissibilityThreshold}};
    return r;
}

// ------------------------------------------------------------------ echo

json units_json(const UnitsConfig& u)
{
    return {{"mode", to_string(u.mode)}, {"u", u.u}, {"hbar", u.hbar}, {"mass", u.mass}};
}

json solver_json(const SolverConfig& s)
{
    return {{"rho_min", s.rho_min},
            {"rho_max", s.rho_max},
            {"sigma_min", s.sigma_min},
            {"sigma_max", s.sigma_max},
            {"scan_steps", s.scan_steps},
            {"resolution", s.resolution},
            {"root_tol", s.root_tol},
            {"trace_tol", s.trace_tol},
            {"oracle_tol", s.oracle_tol},
            {"asymptote_threshold", s.asymptote_threshold}};
}

std::vector<std::string> kind_names(const std::vector<LocusKind>& kinds)
{
    std::vector<std::string> out;
    for (auto k : kinds) out.push_back(to_string(k));
    return out;
}

struct ArgsEcho {
    json operator()(const ScatterArgs& a) const
    {
        return {{"vr", a.vr},       {"vi", a.vi},     {"d", a.d},          {"alpha", a.alpha},
                {"emin", a.emin},   {"emax", a.emax}, {"points", a.points}};
    }
    json operator()(const TraceArgs& a) const
    {
        return {{"kind", to_string(a.kind)}, {"alphas", a.alphas},     {"ns", a.ns},
                {"all_branches", a.all_branches}, {"asymptote", a.asymptote},
                {"recipe", a.recipe ? json(*a.recipe) : json(nullptr)}};
    }
    json operator()(const BlueshiftArgs& a) const
    {
        return {{"ratio", a.ratio}, {"n", a.n}, {"alphas", a.alphas}, {"d", a.d}, {"kind", to_string(a.kind)}};
    }
    json operator()(const SurveyArgs& a) const
    {
        return {{"alpha", a.alpha},
                {"n_min", a.n_min},
                {"n_max", a.n_max},
                {"grid",
                 {{"rho_min", a.grid.rho_min},
                  {"rho_max", a.grid.rho_max},
                  {"sigma_min", a.grid.sigma_min},
                  {"sigma_max", a.grid.sigma_max},
                  {"rho_points", a.grid.rho_points},
                  {"sigma_points", a.grid.sigma_points}}},
                {"kinds", kind_names(a.kinds)}};
    }
};

} // namespace

RunResult execute(const RunConfig& config, const CommandArgs& args)
{
    if (config.formats.empty()) throw UsageError("--format needs at least one of csv, json, svg");
    try {
        return std::visit(
            [&](const auto& a) -> RunResult {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, ScatterArgs>) return run_scatter(config, a);
                else if constexpr (std::is_same_v<T, TraceArgs>) return run_trace(config, a);
                else if constexpr (std::is_same_v<T, BlueshiftArgs>) return run_blueshift(config, a);
                else return run_survey(config, a);
            },
            args);
    } catch (const SingularPointError&) {
        throw;
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

json config_echo(const RunConfig& config, const CommandArgs& args)
{
    std::vector<std::string> formats;
    for (auto f : config.formats) formats.push_back(to_string(f));
    return {{"units", units_json(config.units)},
            {"solver", solver_json(config.solver)},
            {"out_dir", config.out_dir.generic_string()},
            {"formats", formats},
            {"stamp", config.stamp},
            {"command", command_name(args)},
            {"args", std::visit(ArgsEcho{}, args)}};
}

std::pair<RunConfig, CommandArgs> config_from_echo(const json& echo)
{
    RunConfig c;
    const json& u = echo.at("units");
    c.units.mode = unit_mode_from_string(u.at("mode").get<std::string>());
    c.units.u = u.at("u").get<double>();
    c.units.hbar = u.at("hbar").get<double>();
    c.units.mass = u.at("mass").get<double>();
    const json& s = echo.at("solver");
    c.solver.rho_min = s.at("rho_min").get<double>();
    c.solver.rho_max = s.at("rho_max").get<double>();
    c.solver.sigma_min = s.at("sigma_min").get<double>();
    c.solver.sigma_max = s.at("sigma_max").get<double>();
    c.solver.scan_steps = s.at("scan_steps").get<int>();
    c.solver.resolution = s.at("resolution").get<int>();
    c.solver.root_tol = s.at("root_tol").get<double>();
    c.solver.trace_tol = s.at("trace_tol").get<double>();
    c.solver.oracle_tol = s.at("oracle_tol").get<double>();
    c.solver.asymptote_threshold = s.at("asymptote_threshold").get<double>();
    c.out_dir = echo.at("out_dir").get<std::string>();
    c.formats.clear();
    for (const auto& f : echo.at("formats")) c.formats.push_back(format_from_string(f.get<std::string>()));
    c.stamp = echo.value("stamp", false);

    const std::string cmd = echo.at("command").get<std::string>();
    const json& a = echo.at("args");
    if (cmd == "scatter") {
        ScatterArgs x;
        x.vr = a.at("vr").get<double>();
        x.vi = a.at("vi").get<double>();
        x.d = a.at("d").get<double>();
        x.alpha = a.at("alpha").get<double>();
        x.emin = a.at("emin").get<double>();
        x.emax = a.at("emax").get<double>();
        x.points = a.at("points").get<int>();
        return {c, x};
    }
    if (cmd == "trace") {
        TraceArgs x;
        x.kind = kind_from_string(a.at("kind").get<std::string>());
        x.alphas = a.at("alphas").get<std::vector<double>>();
        x.ns = a.at("ns").get<std::vector<int>>();
        x.all_branches = a.at("all_branches").get<bool>();
        x.asymptote = a.at("asymptote").get<bool>();
        if (!a.at("recipe").is_null()) x.recipe = a.at("recipe").get<std::string>();
        return {c, x};
    }
    if (cmd == "blueshift") {
        BlueshiftArgs x;
        x.ratio = a.at("ratio").get<double>();
        x.n = a.at("n").get<int>();
        x.alphas = a.at("alphas").get<std::vector<double>>();
        x.d = a.at("d").get<double>();
        x.kind = kind_from_string(a.at("kind").get<std::string>());
        return {c, x};
    }
    if (cmd == "survey") {
        SurveyArgs x;
        x.alpha = a.at("alpha").get<double>();
        x.n_min = a.at("n_min").get<int>();
        x.n_max = a.at("n_max").get<int>();
        const json& g = a.at("grid");
        x.grid.rho_min = g.at("rho_min").get<double>();
        x.grid.rho_max = g.at("rho_max").get<double>();
        x.grid.sigma_min = g.at("sigma_min").get<double>();
        x.grid.sigma_max = g.at("sigma_max").get<double>();
        x.grid.rho_points = g.at("rho_points").get<int>();
        x.grid.sigma_points = g.at("sigma_points").get<int>();
        x.kinds.clear();
        for (const auto& k : a.at("kinds")) x.kinds.push_back(kind_from_string(k.get<std::string>()));
        return {c, x};
    }
    throw UsageError("unknown command in config echo: '" + cmd + "'");
}

json payload_json(const RunResult& result)
{
    json tables = json::object();
    for (const Table& t : result.tables) tables[t.name] = to_json(t);
    return {{"tables", std::move(tables)}, {"summary", result.summary}};
}

json envelope(const RunConfig& config, const CommandArgs& args, const RunResult& result)
{
    json stamp = nullptr;
    if (config.stamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        stamp = buf;
    }
    return {{"schema_version", kSchemaVersion},
            {"tool", kToolName},
            {"version", tool_version()},
            {"command", result.command},
            {"timestamp", stamp},
            {"exit_code", result.exit_code},
            {"config", config_echo(config, args)},
            {"payload", payload_json(result)},
            {"anomalies", result.anomalies}};
}

std::vector<std::filesystem::path> write_outputs(const RunConfig& config, const CommandArgs& args,
                                                 const RunResult& result)
{
    namespace fs = std::filesystem;
    fs::create_directories(config.out_dir);
    std::vector<fs::path> written;
    for (Format f : config.formats) {
        switch (f) {
        case Format::Csv:
            for (const Table& t : result.tables) {
                const fs::path p = config.out_dir / (result.basename + "_" + t.name + ".csv");
                atomic_write(p, to_csv(t));
                written.push_back(p);
            }
            break;
        case Format::Json: {
            const fs::path p = config.out_dir / (result.basename + ".json");
            atomic_write(p, envelope(config, args, result).dump(2) + "\n");
            written.push_back(p);
            break;
        }
        case Format::Svg:
            if (result.plot) {
                const fs::path p = config.out_dir / (result.basename + ".svg");
                atomic_write(p, render_svg(*result.plot));
                written.push_back(p);
            }
            break;
        }
    }
    return written;
}

} // namespace fsqm::cli
