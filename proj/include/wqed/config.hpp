#pragma once

// Run configuration for the wqed-scatter tool.
//
// Grammar: one `key = value` pair per line, `#` starts a comment, blank lines
// are ignored. Dimensioned keys carry their unit as a suffix (Gamma10_MHz,
// T_mK, P_dBm, Cc_fF, ...); relative drive strengths and detunings use `_rel`.
// Some keys accept comma-separated lists. Values are converted to SI on the
// way in, ordinary frequencies multiplied by 2 pi.

#include "wqed/errors.hpp"
#include "wqed/g2corr.hpp"
#include "wqed/params_units.hpp"
#include "wqed/scatter2.hpp"
#include "wqed/scatter3.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wqed {

class ConfigError : public Error {
public:
    ConfigError(std::string key, int line, const std::string& message)
        : Error(message), key_(std::move(key)), line_(line) {}

    const std::string& key() const { return key_; }
    int line() const { return line_; }  // 0 when the key is absent

private:
    std::string key_;
    int line_;
};

enum class Scenario { Spectrum, TwoLevel, ThreeLevel, G2 };

Scenario parse_scenario(std::string_view name);
std::string_view scenario_name(Scenario s);

enum class OutputFormat { Csv, CsvWithPlotScript };

struct SpectrumSetup {
    CircuitParams circuit;
    int nLevels = 4;
};

enum class TwoLevelMethod { Analytic, Numeric, Both };

struct TwoLevelSetup {
    DriveSpec drive;  // delta is taken from the sweep
    double T = 0.0;
    std::vector<double> deltaOverGamma10;
    TwoLevelMethod method = TwoLevelMethod::Both;
};

struct ThreeLevelSetup {
    ThreeLevelDrive drive;  // deltaP and NinC are taken from the sweeps
    std::vector<double> deltaPOverGamma10;
    std::vector<double> NinCRel;         // N_in^c / (Gamma10 / 2 pi), detuning curves
    std::vector<double> controlSweepRel; // resonant-probe curve versus control, may be empty
    Method method = Method::Analytic;
};

struct G2Setup {
    G2Config base;  // T and gammaBW are taken from curves
    std::vector<std::pair<double, double>> curves;  // (T in K, gammaBW in rad/s)
};

struct RunConfig {
    Scenario scenario = Scenario::Spectrum;
    std::optional<SpectrumSetup> spectrum;
    std::optional<TwoLevelSetup> twoLevel;
    std::optional<ThreeLevelSetup> threeLevel;
    std::optional<G2Setup> g2;
    std::string outputPath;  // empty: standard output
    OutputFormat format = OutputFormat::Csv;
};

// Parses and validates. The scenario comes from a `scenario = ...` line or
// from `scenario`; when both are present they must agree.
RunConfig parse_config(std::string_view text, std::optional<Scenario> scenario = std::nullopt);

// Column documentation used by --help.
std::string describe_columns();

} // namespace wqed
