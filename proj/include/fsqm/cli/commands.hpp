#pragma once

#include "fsqm/cli/svg.hpp"
#include "fsqm/cli/table.hpp"
#include "fsqm/fractional_medium.hpp"
#include "fsqm/locus_solver.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fsqm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitPartial = 3;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "fsqm";
const char* tool_version();

/// Bad flags or flag combinations. Maps to exit code 1 and writes no files.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json, Svg };
std::string to_string(Format f);
Format format_from_string(const std::string& name);

struct UnitsConfig {
    UnitMode mode = UnitMode::Natural;
    double u = 1.0;
    double hbar = 1.0;
    double mass = 0.5;

    UnitSystem make() const;
};

struct RunConfig {
    UnitsConfig units;
    SolverConfig solver;
    std::filesystem::path out_dir = ".";
    std::vector<Format> formats{Format::Csv, Format::Json};
    bool stamp = false; ///< write a wall-clock timestamp into the JSON envelope
};

struct ScatterArgs {
    double vr = 0.0;
    double vi = 0.0;
    double d = 1.0;
    double alpha = 2.0;
    double emin = 0.1;
    double emax = 10.0;
    int points = 200;
};

struct TraceArgs {
    LocusKind kind = LocusKind::SS;
    std::vector<double> alphas{2.0};
    std::vector<int> ns{1, 2, 3, 4, 5};
    bool all_branches = false;
    bool asymptote = false;
    std::optional<std::string> recipe;
};

struct BlueshiftArgs {
    double ratio = 1.0;
    int n = 2;
    std::vector<double> alphas{2.0, 1.9, 1.8, 1.7, 1.6, 1.5, 1.4, 1.3, 1.2};
    double d = 1.0;
    LocusKind kind = LocusKind::SS;
};

struct SurveyArgs {
    double alpha = 2.0;
    int n_min = -3;
    int n_max = 8;
    SurveyGrid grid;
    std::vector<LocusKind> kinds{LocusKind::SS, LocusKind::CPA};
};

using CommandArgs = std::variant<ScatterArgs, TraceArgs, BlueshiftArgs, SurveyArgs>;

std::string command_name(const CommandArgs& args);

/// Fill kind/alphas/ns (and the asymptote switch) from a named figure preset.
/// Known names: fig1a, fig1b, fig2a, fig2b, fig2c, fig2d.
void apply_recipe(TraceArgs& args, const std::string& recipe);

struct RunResult {
    std::string command;
    std::string basename; ///< stem for output files
    std::vector<Table> tables;
    nlohmann::json summary = nlohmann::json::object();
    nlohmann::json anomalies = nlohmann::json::array();
    std::optional<Plot> plot;
    int exit_code = kExitOk;
};

/// Throws UsageError on inconsistent arguments before any numerics run.
RunResult execute(const RunConfig& config, const CommandArgs& args);

nlohmann::json config_echo(const RunConfig& config, const CommandArgs& args);
/// Inverse of config_echo.
std::pair<RunConfig, CommandArgs> config_from_echo(const nlohmann::json& echo);

nlohmann::json payload_json(const RunResult& result);
nlohmann::json envelope(const RunConfig& config, const CommandArgs& args, const RunResult& result);

/// Write every requested format into config.out_dir; returns the paths written.
std::vector<std::filesystem::path> write_outputs(const RunConfig& config, const CommandArgs& args,
                                                 const RunResult& result);

} // namespace fsqm::cli
