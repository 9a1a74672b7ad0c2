#include "wqed/run.hpp"

#include "wqed/constants.hpp"
#include "wqed/rates.hpp"
#include "wqed/transmon.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace wqed {

namespace {

std::string num(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(std::initializer_list<std::string_view> header) {
        bool first = true;
        for (auto h : header) {
            os_ << (first ? "" : ",") << h;
            first = false;
        }
        os_ << "\r\n";
    }

    CsvWriter& field(const std::string& s) {
        os_ << (fresh_ ? "" : ",") << s;
        fresh_ = false;
        return *this;
    }
    CsvWriter& field(double v) { return field(num(v)); }
    CsvWriter& empty() { return field(std::string()); }
    void end() {
        os_ << "\r\n";
        fresh_ = true;
    }
    std::string str() const { return os_.str(); }

private:
    std::ostringstream os_;
    bool fresh_ = true;
};

double to_MHz(double omega) { return omega / constants::two_pi / 1e6; }

std::string run_spectrum(const SpectrumSetup& s) {
    const DerivedParams d = derive_params(s.circuit);
    const TransmonSpectrum spec = solve_transmon(d.EC, s.circuit.EJ, d.ng, s.nLevels);
    const RateSet rates = transition_rates(spec, d, s.circuit.T);
    CsvWriter csv{"level_idx", "f_GHz", "X_k_km1_e", "Gamma_k_km1_MHz", "Gamma_km1_k_MHz",
                  "GammaPhi_MHz", "gamma_k_km1_MHz", "eps_MHz"};
    for (int k = 0; k < spec.nLevels; ++k) {
        csv.field(std::to_string(k)).field(spec.omegas[k] / constants::two_pi / 1e9);
        if (k == 0) {
            csv.empty().empty().empty();
        } else {
            csv.field(std::abs(spec.chargeME(k, k - 1)) / constants::e)
                .field(to_MHz(rates.GammaDown(k, k - 1)))
                .field(to_MHz(rates.GammaUp(k - 1, k)));
        }
        csv.field(to_MHz(rates.GammaPhi[k]));
        if (k == 0) {
            csv.empty();
        } else {
            csv.field(to_MHz(rates.gammaTotal(k, k - 1)));
        }
        csv.field(spec.epsilons[k] / constants::h / 1e6);
        csv.end();
    }
    return csv.str();
}

std::string run_two_level(const TwoLevelSetup& s) {
    std::vector<double> deltas;
    deltas.reserve(s.deltaOverGamma10.size());
    for (double x : s.deltaOverGamma10) {
        deltas.push_back(x * s.drive.gamma10);
    }
    const bool both = s.method == TwoLevelMethod::Both;
    const Method primary = s.method == TwoLevelMethod::Numeric ? Method::Numeric : Method::Analytic;
    const auto main = sweep_two_level(deltas, s.drive, primary);
    std::vector<ScatterResult> numeric;
    if (both) {
        numeric = sweep_two_level(deltas, s.drive, Method::Numeric);
    }
    CsvWriter csv = both ? CsvWriter{"delta_over_gamma10", "delta_MHz", "Re_r", "Im_r", "R", "T",
                                     "Re_r_numeric", "Im_r_numeric", "R_numeric", "T_numeric"}
                         : CsvWriter{"delta_over_gamma10", "delta_MHz", "Re_r", "Im_r", "R", "T"};
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        csv.field(s.deltaOverGamma10[i]).field(to_MHz(deltas[i]));
        csv.field(main[i].r.real()).field(main[i].r.imag()).field(main[i].R).field(main[i].T);
        if (both) {
            csv.field(numeric[i].r.real()).field(numeric[i].r.imag()).field(numeric[i].R).field(numeric[i].T);
        }
        csv.end();
    }
    return csv.str();
}

std::string run_three_level(const ThreeLevelSetup& s) {
    const double unitFlux = s.drive.Gamma10 / constants::two_pi;
    CsvWriter csv{"sweep", "deltaP_over_gamma10", "NinC_rel", "Re_r", "Im_r", "T_p"};
    auto emit = [&](const char* tag, const std::vector<ThreeLevelRecord>& records) {
        for (const auto& rec : records) {
            csv.field(std::string(tag))
                .field(rec.deltaP / s.drive.gamma10)
                .field(rec.NinC / unitFlux)
                .field(rec.probe.r.real())
                .field(rec.probe.r.imag())
                .field(rec.probe.T);
            csv.end();
        }
    };

    std::vector<double> deltas;
    for (double x : s.deltaPOverGamma10) {
        deltas.push_back(x * s.drive.gamma10);
    }
    std::vector<double> controls;
    for (double x : s.NinCRel) {
        controls.push_back(x * unitFlux);
    }
    emit("detuning", sweep_three_level(deltas, controls, s.drive, s.method));

    if (!s.controlSweepRel.empty()) {
        std::vector<double> sweep;
        for (double x : s.controlSweepRel) {
            sweep.push_back(x * unitFlux);
        }
        emit("control", sweep_three_level({0.0}, sweep, s.drive, s.method));
    }
    return csv.str();
}

std::string run_g2(const G2Setup& s) {
    CsvWriter csv{"T_mK", "BW_MHz", "tau_ns", "g2"};
    for (const auto& [T, bw] : s.curves) {
        G2Config c = s.base;
        c.T = T;
        c.gammaBW = bw;
        const G2Curve curve = c.filtered ? g2_filtered(c) : g2_unfiltered(c);
        const double bwCol = c.filtered ? to_MHz(bw) : std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < curve.taus.size(); ++i) {
            csv.field(T * 1e3).field(bwCol).field(curve.taus[i] * 1e9).field(curve.values[i]);
            csv.end();
        }
    }
    return csv.str();
}

const char* kScriptPrologue = R"PY(import csv
import sys

import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else %CSV%
with open(path, newline="") as fh:
    rows = list(csv.DictReader(fh))


def col(rs, name):
    return [float(r[name]) if r[name] != "" else float("nan") for r in rs]

)PY";

const char* kSpectrumPlot = R"PY(fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
ax1.plot(col(rows, "level_idx"), col(rows, "f_GHz"), "o-")
ax1.set_xlabel("level k")
ax1.set_ylabel("f_k (GHz)")
ax2.semilogy(col(rows, "level_idx"), col(rows, "Gamma_k_km1_MHz"), "o-", label="relaxation k -> k-1")
ax2.semilogy(col(rows, "level_idx"), col(rows, "gamma_k_km1_MHz"), "s--", label="coherence decay")
ax2.set_xlabel("level k")
ax2.set_ylabel("rate / 2pi (MHz)")
ax2.legend()
)PY";

const char* kTwoLevelPlot = R"PY(x = col(rows, "delta_over_gamma10")
fig, ax = plt.subplots(figsize=(6, 4))
ax.plot(x, col(rows, "R"), color="tab:red", label="R")
ax.plot(x, col(rows, "T"), color="tab:blue", label="T")
ax.set_xlabel("detuning / gamma10")
ax.set_ylim(0, 1.02)
ax.legend()
)PY";

const char* kThreeLevelPlot = R"PY(detuning = [r for r in rows if r["sweep"] == "detuning"]
control = [r for r in rows if r["sweep"] == "control"]
fig, axes = plt.subplots(1, 2 if control else 1, figsize=(11 if control else 6, 4), squeeze=False)
ax = axes[0][0]
for level in sorted({r["NinC_rel"] for r in detuning}, key=float):
    rs = [r for r in detuning if r["NinC_rel"] == level]
    ax.plot(col(rs, "deltaP_over_gamma10"), col(rs, "T_p"), label="NinC_rel = " + level)
ax.set_xlabel("probe detuning / gamma10")
ax.set_ylabel("probe transmittance")
ax.legend()
if control:
    ax = axes[0][1]
    ax.semilogx(col(control, "NinC_rel"), col(control, "T_p"))
    ax.set_xlabel("control strength NinC_rel")
    ax.set_ylabel("probe transmittance")
)PY";

const char* kG2Plot = R"PY(fig, ax = plt.subplots(figsize=(6, 4))
keys = []
for r in rows:
    k = (r["T_mK"], r["BW_MHz"])
    if k not in keys:
        keys.append(k)
for t, bw in keys:
    rs = [r for r in rows if (r["T_mK"], r["BW_MHz"]) == (t, bw)]
    ax.plot(col(rs, "tau_ns"), col(rs, "g2"), label="T = %s mK, BW = %s MHz" % (t, bw))
ax.set_xlabel("tau (ns)")
ax.set_ylabel("g2(tau)")
ax.legend()
)PY";

std::string python_literal(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '\\' || ch == '"') {
            out += '\\';
        }
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string plot_script(Scenario scenario, const std::string& csvPath) {
    std::string script = kScriptPrologue;
    script.replace(script.find("%CSV%"), 5, python_literal(csvPath));
    switch (scenario) {
    case Scenario::Spectrum: script += kSpectrumPlot; break;
    case Scenario::TwoLevel: script += kTwoLevelPlot; break;
    case Scenario::ThreeLevel: script += kThreeLevelPlot; break;
    case Scenario::G2: script += kG2Plot; break;
    }
    script += "fig.tight_layout()\nplt.show()\n";
    return script;
}

RunOutput execute(const RunConfig& cfg) {
    RunOutput out;
    switch (cfg.scenario) {
    case Scenario::Spectrum: out.csv = run_spectrum(cfg.spectrum.value()); break;
    case Scenario::TwoLevel: out.csv = run_two_level(cfg.twoLevel.value()); break;
    case Scenario::ThreeLevel: out.csv = run_three_level(cfg.threeLevel.value()); break;
    case Scenario::G2: out.csv = run_g2(cfg.g2.value()); break;
    }
    if (cfg.format == OutputFormat::CsvWithPlotScript) {
        const std::string name = cfg.outputPath.empty()
                                     ? std::string(scenario_name(cfg.scenario)) + ".csv"
                                     : std::filesystem::path(cfg.outputPath).filename().string();
        out.plotScript = plot_script(cfg.scenario, name);
    }
    return out;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RunOutput result;
    try {
        result = execute(cfg);
    } catch (const Error& e) {
        err << "wqed-scatter: " << scenario_name(cfg.scenario) << ": " << e.what() << '\n';
        return 1;
    }

    if (cfg.outputPath.empty()) {
        out << result.csv;
        if (!result.plotScript.empty()) {
            err << "wqed-scatter: plot script needs --out to be written next to the CSV\n";
            return 2;
        }
        return 0;
    }

    const std::filesystem::path csvPath(cfg.outputPath);
    std::ofstream csv(csvPath, std::ios::binary);
    csv << result.csv;
    if (!csv) {
        err << "wqed-scatter: cannot write " << csvPath.string() << '\n';
        return 1;
    }
    if (!result.plotScript.empty()) {
        std::filesystem::path scriptPath = csvPath;
        scriptPath.replace_filename(csvPath.stem().string() + "_plot.py");
        std::ofstream script(scriptPath, std::ios::binary);
        script << result.plotScript;
        if (!script) {
            err << "wqed-scatter: cannot write " << scriptPath.string() << '\n';
            return 1;
        }
    }
    return 0;
}

} // namespace wqed
