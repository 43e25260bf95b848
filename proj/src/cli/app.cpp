#include "fsqm/cli/app.hpp"

#include "fsqm/cli/commands.hpp"
#include "fsqm/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace fsqm::cli {

namespace {

struct GlobalOptions {
    std::string units = "natural";
    double u = 0.0;
    double hbar = 0.0;
    double mass = 0.0;
    std::string out = ".";
    std::vector<std::string> formats{"csv", "json"};
    bool stamp = false;
    bool seedless = false;
    SolverConfig solver;
};

UnitsConfig resolve_units(const GlobalOptions& g, const CLI::App& app)
{
    UnitsConfig u;
    u.mode = unit_mode_from_string(g.units);
    const bool has_u = app.get_option("--u")->count() > 0;
    if (u.mode == UnitMode::Natural) {
        if (app.get_option("--hbar")->count() || app.get_option("--mass")->count()) {
            throw UsageError("--hbar and --mass apply to physical units only");
        }
        u.u = has_u ? g.u : 1.0;
        u.hbar = 1.0;
        u.mass = 0.5;
    } else {
        u.u = has_u ? g.u : 1e-5 * si::kSpeedOfLight;
        u.hbar = app.get_option("--hbar")->count() ? g.hbar : si::kHbar;
        u.mass = app.get_option("--mass")->count() ? g.mass : si::kElectronMass;
    }
    (void)u.make(); // validates
    return u;
}

LocusKind parse_kind(const std::string& s) { return kind_from_string(s); }

std::vector<LocusKind> parse_kinds(const std::string& s)
{
    if (s == "both") return {LocusKind::SS, LocusKind::CPA};
    return {kind_from_string(s)};
}

std::pair<int, int> parse_grid(const std::string& s)
{
    const auto x = s.find_first_of("xX");
    if (x == std::string::npos) throw UsageError("--grid expects RHOxSIGMA, e.g. 50x50");
    try {
        std::size_t p1 = 0;
        std::size_t p2 = 0;
        const int a = std::stoi(s.substr(0, x), &p1);
        const int b = std::stoi(s.substr(x + 1), &p2);
        if (p1 != x || p2 != s.size() - x - 1) throw std::invalid_argument(s);
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("--grid expects RHOxSIGMA, e.g. 50x50");
    }
}

int report(const RunConfig& config, const CommandArgs& args, const RunResult& result)
{
    for (const auto& p : write_outputs(config, args, result)) std::cout << p.generic_string() << "\n";
    if (result.summary.contains("verdict")) std::cout << "verdict: " << result.summary["verdict"].get<std::string>() << "\n";
    if (!result.anomalies.empty()) std::cerr << result.anomalies.size() << " anomalies recorded in the envelope\n";
    return result.exit_code;
}

int dispatch(CLI::App& app, const GlobalOptions& g, CommandArgs args, CLI::App* replay, const std::string& replay_file,
             bool replay_check)
{
    if (replay->parsed()) {
        std::ifstream is(replay_file);
        if (!is) throw UsageError("cannot read " + replay_file);
        nlohmann::json original;
        try {
            original = nlohmann::json::parse(is);
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(replay_file + ": " + e.what());
        }
        auto [config, replay_args] = config_from_echo(original.at("config"));
        if (app.get_option("--out")->count()) config.out_dir = g.out;
        if (app.get_option("--format")->count()) {
            config.formats.clear();
            for (const auto& f : g.formats) config.formats.push_back(format_from_string(f));
        }
        const RunResult result = execute(config, replay_args);
        const int code = report(config, replay_args, result);
        if (replay_check && payload_json(result) != original.at("payload")) {
            std::cerr << "replay: payload differs from " << replay_file << "\n";
            return kExitNumerical;
        }
        return code;
    }

    RunConfig config;
    config.units = resolve_units(g, app);
    config.solver = g.solver;
    config.out_dir = g.out;
    config.formats.clear();
    for (const auto& f : g.formats) config.formats.push_back(format_from_string(f));
    config.stamp = g.stamp;
    return report(config, args, execute(config, args));
}

} // namespace

int run_cli(const std::vector<std::string>& argv)
{
    CLI::App app{"Fractional non-Hermitian barrier scattering and SS/CPA loci", kToolName};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "flat key=value file; command-line flags win");

    GlobalOptions g;
    app.add_option("--out", g.out, "output directory")->capture_default_str();
    app.add_option("--format", g.formats, "comma-separated subset of csv,json,svg")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->capture_default_str();
    app.add_flag("--seedless", g.seedless, "accepted for scripts; every run is deterministic");
    app.add_flag("--stamp", g.stamp, "record wall-clock time in the JSON envelope");
    app.add_option("--units", g.units, "natural (hbar=1, m=1/2) or physical (SI)")
        ->check(CLI::IsMember({"natural", "physical"}))
        ->capture_default_str();
    app.add_option("--u", g.u, "characteristic velocity (default 1 natural, 1e-5 c physical)");
    app.add_option("--hbar", g.hbar, "physical units only");
    app.add_option("--mass", g.mass, "physical units only");
    app.add_option("--sigma-min", g.solver.sigma_min)->capture_default_str();
    app.add_option("--sigma-max", g.solver.sigma_max)->capture_default_str();
    app.add_option("--scan-steps", g.solver.scan_steps)->capture_default_str();
    app.add_option("--root-tol", g.solver.root_tol)->capture_default_str();
    app.add_option("--trace-tol", g.solver.trace_tol)->capture_default_str();
    app.add_option("--oracle-tol", g.solver.oracle_tol)->capture_default_str();
    app.add_option("--asymptote-threshold", g.solver.asymptote_threshold)->capture_default_str();

    std::vector<double> rho_range;
    auto add_rho_options = [&](CLI::App* sub) {
        sub->add_option("--rho-range", rho_range, "MIN,MAX")->delimiter(',')->expected(2);
        sub->add_option("--resolution", g.solver.resolution, "rho columns")->capture_default_str();
    };

    ScatterArgs sc;
    auto* scatter = app.add_subcommand("scatter", "T and R over an energy grid");
    scatter->add_option("--vr", sc.vr)->capture_default_str();
    scatter->add_option("--vi", sc.vi)->capture_default_str();
    scatter->add_option("--d", sc.d, "barrier half-width")->capture_default_str();
    scatter->add_option("--alpha", sc.alpha)->capture_default_str();
    scatter->add_option("--emin", sc.emin)->capture_default_str();
    scatter->add_option("--emax", sc.emax)->capture_default_str();
    scatter->add_option("--points", sc.points)->capture_default_str();

    TraceArgs tr;
    std::string trace_kind = "ss";
    std::string recipe;
    std::vector<double> trace_alphas;
    std::vector<int> trace_ns;
    auto* trace = app.add_subcommand("trace", "SS or CPA loci in the (rho, sigma) plane");
    trace->add_option("--kind", trace_kind)->check(CLI::IsMember({"ss", "cpa"}))->capture_default_str();
    trace->add_option("--alpha", trace_alphas, "repeatable (default 2)")->delimiter(',');
    trace->add_option("--n", trace_ns, "repeatable (default 1..5)")->delimiter(',');
    trace->add_flag("--all-branches", tr.all_branches, "also trace the plus branch");
    trace->add_flag("--asymptote", tr.asymptote, "estimate the vertical asymptote of each curve");
    trace->add_option("--recipe", recipe, "fig1a, fig1b, fig2a, fig2b, fig2c or fig2d");
    add_rho_options(trace);

    BlueshiftArgs bs;
    std::string bs_kind = "ss";
    auto* blueshift = app.add_subcommand("blueshift", "SS energy along a fixed gain/loss ray as alpha decreases");
    blueshift->add_option("--ratio", bs.ratio, "V_i / V_r")->capture_default_str();
    blueshift->add_option("--n", bs.n)->capture_default_str();
    blueshift->add_option("--alphas", bs.alphas, "strictly descending")->delimiter(',');
    blueshift->add_option("--d", bs.d)->capture_default_str();
    blueshift->add_option("--kind", bs_kind)->check(CLI::IsMember({"ss", "cpa"}))->capture_default_str();
    add_rho_options(blueshift);

    SurveyArgs sv;
    std::string grid = "50x50";
    std::string sv_kind = "both";
    std::vector<double> grid_rho;
    std::vector<double> grid_sigma;
    auto* survey = app.add_subcommand("survey", "which (n, branch) families admit zeros");
    survey->add_option("--alpha", sv.alpha)->capture_default_str();
    survey->add_option("--n-min", sv.n_min)->capture_default_str();
    survey->add_option("--n-max", sv.n_max)->capture_default_str();
    survey->add_option("--grid", grid, "RHOxSIGMA points")->capture_default_str();
    survey->add_option("--grid-rho", grid_rho, "MIN,MAX")->delimiter(',')->expected(2);
    survey->add_option("--grid-sigma", grid_sigma, "MIN,MAX of |sigma|")->delimiter(',')->expected(2);
    survey->add_option("--kind", sv_kind)->check(CLI::IsMember({"ss", "cpa", "both"}))->capture_default_str();

    app.add_subcommand("version", "print the tool version");

    std::string replay_file;
    bool replay_check = false;
    auto* replay = app.add_subcommand("replay", "re-run the command echoed in a JSON envelope");
    replay->add_option("envelope", replay_file)->required();
    replay->add_flag("--check", replay_check, "fail unless the payload matches the envelope");

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand("version")) {
            std::cout << kToolName << " " << tool_version() << "\n";
            return kExitOk;
        }
        if (rho_range.size() == 2) {
            g.solver.rho_min = rho_range[0];
            g.solver.rho_max = rho_range[1];
        }
        CommandArgs args = sc;
        if (trace->parsed()) {
            if (!recipe.empty()) apply_recipe(tr, recipe);
            if (trace->get_option("--kind")->count() || recipe.empty()) tr.kind = parse_kind(trace_kind);
            if (!trace_alphas.empty()) tr.alphas = trace_alphas;
            if (!trace_ns.empty()) tr.ns = trace_ns;
            args = tr;
        } else if (blueshift->parsed()) {
            bs.kind = parse_kind(bs_kind);
            args = bs;
        } else if (survey->parsed()) {
            std::tie(sv.grid.rho_points, sv.grid.sigma_points) = parse_grid(grid);
            if (grid_rho.size() == 2) {
                sv.grid.rho_min = grid_rho[0];
                sv.grid.rho_max = grid_rho[1];
            }
            if (grid_sigma.size() == 2) {
                sv.grid.sigma_min = grid_sigma[0];
                sv.grid.sigma_max = grid_sigma[1];
            }
            sv.kinds = parse_kinds(sv_kind);
            args = sv;
        }
        return dispatch(app, g, args, replay, replay_file, replay_check);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SingularPointError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

int run_cli(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

} // namespace fsqm::cli
