#include "wqed/config.hpp"

#include "wqed/constants.hpp"
#include "wqed/rates.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace wqed {

namespace {

enum class Dim { Frequency, Energy, Temperature, Capacitance, Impedance, Voltage, Power, Time, Relative };

struct UnitDef {
    std::string_view suffix;
    double scale;
};

const std::vector<UnitDef>& units_of(Dim d) {
    static const std::map<Dim, std::vector<UnitDef>> table{
        {Dim::Frequency, {{"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}}},
        {Dim::Energy, {{"J", 1.0}, {"MHz", 1e6}, {"GHz", 1e9}}},
        {Dim::Temperature, {{"K", 1.0}, {"mK", 1e-3}}},
        {Dim::Capacitance, {{"F", 1.0}, {"pF", 1e-12}, {"fF", 1e-15}}},
        {Dim::Impedance, {{"ohm", 1.0}}},
        {Dim::Voltage, {{"V", 1.0}, {"mV", 1e-3}, {"uV", 1e-6}}},
        {Dim::Power, {{"W", 1.0}, {"dBm", 1.0}}},
        {Dim::Time, {{"s", 1.0}, {"us", 1e-6}, {"ns", 1e-9}}},
        {Dim::Relative, {{"rel", 1.0}}},
    };
    return table.at(d);
}

enum class Kind { Integer, Real, Word, Text };

constexpr unsigned bit(Scenario s) { return 1u << static_cast<unsigned>(s); }
constexpr unsigned kSpectrum = bit(Scenario::Spectrum);
constexpr unsigned kTwo = bit(Scenario::TwoLevel);
constexpr unsigned kThree = bit(Scenario::ThreeLevel);
constexpr unsigned kG2 = bit(Scenario::G2);
constexpr unsigned kAll = kSpectrum | kTwo | kThree | kG2;

struct DimKey {
    Dim dim;
    unsigned scenarios;
    unsigned listScenarios;
};

struct PlainKey {
    Kind kind;
    unsigned scenarios;
    unsigned listScenarios;
};

const std::map<std::string, DimKey, std::less<>>& dimensioned_keys() {
    static const std::map<std::string, DimKey, std::less<>> keys{
        {"Cc", {Dim::Capacitance, kSpectrum, 0}},
        {"CJ", {Dim::Capacitance, kSpectrum, 0}},
        {"EJ", {Dim::Energy, kSpectrum, 0}},
        {"Z0", {Dim::Impedance, kSpectrum, 0}},
        {"VDC", {Dim::Voltage, kSpectrum, 0}},
        {"T", {Dim::Temperature, kAll, kG2}},
        {"Gamma10", {Dim::Frequency, kTwo | kThree | kG2, 0}},
        {"Gamma21", {Dim::Frequency, kThree, 0}},
        {"gamma10", {Dim::Frequency, kTwo | kThree, 0}},
        {"gamma20", {Dim::Frequency, kThree, 0}},
        {"gamma21", {Dim::Frequency, kThree, 0}},
        {"f10", {Dim::Frequency, kTwo | kThree | kG2, 0}},
        {"f21", {Dim::Frequency, kThree, 0}},
        {"BW", {Dim::Frequency, kG2, kG2}},
        {"P", {Dim::Power, kTwo | kG2, 0}},
        {"Nin", {Dim::Relative, kTwo | kG2, 0}},
        {"NinP", {Dim::Relative, kThree, 0}},
        {"NinC", {Dim::Relative, kThree, kThree}},
        {"delta_min", {Dim::Relative, kTwo, 0}},
        {"delta_max", {Dim::Relative, kTwo, 0}},
        {"deltaP_min", {Dim::Relative, kThree, 0}},
        {"deltaP_max", {Dim::Relative, kThree, 0}},
        {"deltaC", {Dim::Relative, kThree, 0}},
        {"NinC_sweep_min", {Dim::Relative, kThree, 0}},
        {"NinC_sweep_max", {Dim::Relative, kThree, 0}},
        {"tau_max", {Dim::Time, kG2, 0}},
    };
    return keys;
}

const std::map<std::string, PlainKey, std::less<>>& plain_keys() {
    static const std::map<std::string, PlainKey, std::less<>> keys{
        {"scenario", {Kind::Word, kAll, 0}},
        {"output", {Kind::Text, kAll, 0}},
        {"format", {Kind::Word, kAll, 0}},
        {"ng", {Kind::Real, kSpectrum, 0}},
        {"nPorts", {Kind::Integer, kSpectrum, 0}},
        {"nLevels", {Kind::Integer, kSpectrum, 0}},
        {"delta_points", {Kind::Integer, kTwo, 0}},
        {"deltaP_points", {Kind::Integer, kThree, 0}},
        {"NinC_sweep_points", {Kind::Integer, kThree, 0}},
        {"method", {Kind::Word, kTwo | kThree, 0}},
        {"field", {Kind::Word, kG2, 0}},
        {"filtered", {Kind::Word, kG2, 0}},
        {"nFock", {Kind::Integer, kG2, 0}},
        {"tau_points", {Kind::Integer, kG2, 0}},
        {"thermal_factor", {Kind::Word, kG2, 0}},
        {"combine", {Kind::Word, kG2, 0}},
    };
    return keys;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string normalize_minus(std::string s) {
    static const std::string unicodeMinus = "\xE2\x88\x92";
    for (auto pos = s.find(unicodeMinus); pos != std::string::npos; pos = s.find(unicodeMinus, pos)) {
        s.replace(pos, unicodeMinus.size(), "-");
    }
    return s;
}

// One `key = value` line after syntax checks.
struct Entry {
    std::string key;   // as written
    std::string base;  // key without unit suffix
    std::string unit;  // empty for plain keys
    std::string value;
    int line = 0;
};

std::vector<double> parse_numbers(const Entry& e) {
    std::vector<double> out;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string tok = normalize_minus(trim(item));
        if (!tok.empty() && tok.front() == '+') {
            tok.erase(0, 1);
        }
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
            throw ConfigError(e.key, e.line,
                              "malformed number for key '" + e.key + "' at line " + std::to_string(e.line) + ": '" +
                                  trim(item) + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ConfigError(e.key, e.line, "missing value for key '" + e.key + "' at line " + std::to_string(e.line));
    }
    return out;
}

std::string unit_list(Dim d) {
    std::string s;
    for (const auto& u : units_of(d)) {
        s += (s.empty() ? "_" : ", _") + std::string(u.suffix);
    }
    return s;
}

Entry classify(const std::string& key, const std::string& value, int line) {
    Entry e{key, key, {}, value, line};
    if (plain_keys().contains(key)) {
        return e;
    }
    const auto split = key.rfind('_');
    if (split != std::string::npos) {
        const std::string base = key.substr(0, split);
        const std::string unit = key.substr(split + 1);
        if (auto it = dimensioned_keys().find(base); it != dimensioned_keys().end()) {
            const auto& us = units_of(it->second.dim);
            if (std::none_of(us.begin(), us.end(), [&](const UnitDef& u) { return u.suffix == unit; })) {
                throw ConfigError(key, line,
                                  "unit-suffix mismatch for key '" + key + "' at line " + std::to_string(line) +
                                      ": '" + base + "' accepts " + unit_list(it->second.dim));
            }
            e.base = base;
            e.unit = unit;
            return e;
        }
    }
    if (auto it = dimensioned_keys().find(key); it != dimensioned_keys().end()) {
        throw ConfigError(key, line,
                          "unit-suffix mismatch for key '" + key + "' at line " + std::to_string(line) +
                              ": a unit suffix is required (" + unit_list(it->second.dim) + ")");
    }
    throw ConfigError(key, line, "unknown key '" + key + "' at line " + std::to_string(line));
}

class Resolver {
public:
    Resolver(std::map<std::string, Entry> entries, Scenario scenario)
        : entries_(std::move(entries)), scenario_(scenario) {
        for (const auto& [base, e] : entries_) {
            unsigned allowed = 0;
            if (auto p = plain_keys().find(base); p != plain_keys().end()) {
                allowed = p->second.scenarios;
            } else {
                allowed = dimensioned_keys().at(base).scenarios;
            }
            if (!(allowed & bit(scenario_))) {
                throw ConfigError(e.key, e.line,
                                  "key '" + e.key + "' at line " + std::to_string(e.line) +
                                      " is not used by scenario '" + std::string(scenario_name(scenario_)) + "'");
            }
        }
    }

    bool has(std::string_view base) const { return entries_.find(std::string(base)) != entries_.end(); }

    std::vector<double> list(std::string_view base) const {
        const Entry& e = entry(base);
        const DimKey& k = dimensioned_keys().at(e.base);
        std::vector<double> values = parse_numbers(e);
        if (values.size() > 1 && !(k.listScenarios & bit(scenario_))) {
            throw ConfigError(e.key, e.line, "key '" + e.key + "' at line " + std::to_string(e.line) +
                                                 " takes a single value");
        }
        const auto& us = units_of(k.dim);
        const double scale = std::find_if(us.begin(), us.end(), [&](const UnitDef& u) { return u.suffix == e.unit; })->scale;
        for (double& v : values) {
            if (k.dim == Dim::Power && e.unit == "dBm") {
                v = to_watts(DBm{v}).value;
            } else if (k.dim == Dim::Frequency) {
                v *= constants::two_pi * scale;
            } else if (k.dim == Dim::Energy && e.unit != "J") {
                v *= constants::h * scale;
            } else {
                v *= scale;
            }
        }
        return values;
    }

    double scalar(std::string_view base) const { return list(base).front(); }
    double scalar(std::string_view base, double fallback) const { return has(base) ? scalar(base) : fallback; }

    double required(std::string_view base) const {
        if (!has(base)) {
            const auto& k = dimensioned_keys().at(std::string(base));
            throw ConfigError(std::string(base), 0,
                              "missing required key '" + std::string(base) + "' (with unit suffix " +
                                  unit_list(k.dim) + ") for scenario '" + std::string(scenario_name(scenario_)) + "'");
        }
        return scalar(base);
    }

    double real(std::string_view name) const {
        const Entry& e = entry(name);
        const auto values = parse_numbers(e);
        if (values.size() != 1) {
            throw ConfigError(e.key, e.line, "key '" + e.key + "' takes a single value");
        }
        return values.front();
    }

    int integer(std::string_view name, int fallback) const {
        if (!has(name)) {
            return fallback;
        }
        const double v = real(name);
        const Entry& e = entry(name);
        if (v != std::floor(v) || std::abs(v) > 1e9) {
            throw ConfigError(e.key, e.line, "malformed number for key '" + e.key + "' at line " +
                                                 std::to_string(e.line) + ": expected an integer");
        }
        return static_cast<int>(v);
    }

    std::string word(std::string_view name, std::string fallback) const {
        return has(name) ? trim(entry(name).value) : std::move(fallback);
    }

    [[noreturn]] void fail(std::string_view name, const std::string& message) const {
        const auto it = entries_.find(std::string(name));
        if (it != entries_.end()) {
            throw ConfigError(it->second.key, it->second.line,
                              "key '" + it->second.key + "' at line " + std::to_string(it->second.line) + ": " + message);
        }
        throw ConfigError(std::string(name), 0, "key '" + std::string(name) + "': " + message);
    }

    template <typename T>
    T choose(std::string_view name, const std::map<std::string, T, std::less<>>& options, T fallback) const {
        if (!has(name)) {
            return fallback;
        }
        const std::string w = word(name, "");
        if (auto it = options.find(w); it != options.end()) {
            return it->second;
        }
        std::string allowed;
        for (const auto& [k, v] : options) {
            allowed += (allowed.empty() ? "" : ", ") + k;
        }
        fail(name, "unrecognised value '" + w + "' (expected one of " + allowed + ")");
    }

private:
    const Entry& entry(std::string_view base) const { return entries_.at(std::string(base)); }

    std::map<std::string, Entry> entries_;
    Scenario scenario_;
};

std::vector<double> linear_grid(double lo, double hi, int points) {
    if (points == 1) {
        return {lo};
    }
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) {
        g[i] = lo + (hi - lo) * i / (points - 1);
    }
    return g;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> g = linear_grid(std::log10(lo), std::log10(hi), points);
    for (double& v : g) {
        v = std::pow(10.0, v);
    }
    return g;
}

int require_points(const Resolver& r, std::string_view name, int fallback, int minimum) {
    const int n = r.integer(name, fallback);
    if (n < minimum) {
        r.fail(name, "must be at least " + std::to_string(minimum));
    }
    return n;
}

SpectrumSetup resolve_spectrum(const Resolver& r) {
    SpectrumSetup s;
    s.circuit.Cc = r.required("Cc");
    s.circuit.CJ = r.required("CJ");
    s.circuit.EJ = r.required("EJ");
    s.circuit.Z0 = r.required("Z0");
    s.circuit.T = r.scalar("T", 0.0);
    s.circuit.nPorts = r.integer("nPorts", 1);
    s.nLevels = require_points(r, "nLevels", 4, 2);
    if (r.has("VDC") && r.has("ng")) {
        r.fail("ng", "give either VDC or ng, not both");
    }
    s.circuit.VDC = r.scalar("VDC", 0.0);
    if (r.has("ng")) {
        if (!(s.circuit.Cc > 0.0)) {
            r.fail("Cc", "must be positive");
        }
        s.circuit.VDC = 2.0 * constants::e * r.real("ng") / s.circuit.Cc;
    }
    try {
        s.circuit.validate();
    } catch (const ParameterError& e) {
        throw ConfigError("circuit", 0, e.what());
    }
    return s;
}

double drive_flux(const Resolver& r, double Gamma10, double omega10) {
    if (r.has("Nin") && r.has("P")) {
        r.fail("P", "give either Nin_rel or P, not both");
    }
    if (r.has("P")) {
        if (!(omega10 > 0.0)) {
            r.fail("P", "a power drive needs f10 to convert to photon flux");
        }
        return power_to_flux(Watts{r.scalar("P")}, omega10);
    }
    if (!r.has("Nin")) {
        throw ConfigError("Nin", 0, "missing required key 'Nin' (_rel) or 'P' (_dBm, _W)");
    }
    const double rel = r.scalar("Nin");
    if (rel < 0.0) {
        r.fail("Nin", "must be non-negative");
    }
    return rel * Gamma10 / constants::two_pi;
}

TwoLevelSetup resolve_two_level(const Resolver& r) {
    TwoLevelSetup s;
    const double Gamma10 = r.required("Gamma10");
    if (!(Gamma10 > 0.0)) {
        r.fail("Gamma10", "must be positive");
    }
    const double omega10 = r.scalar("f10", 0.0);
    s.T = r.scalar("T", 0.0);
    double n = 0.0;
    if (s.T > 0.0) {
        if (!(omega10 > 0.0)) {
            r.fail("T", "finite temperature needs f10 for the thermal occupation");
        }
        n = thermal_occupation(omega10, s.T);
    } else if (s.T < 0.0) {
        r.fail("T", "must be non-negative");
    }
    s.drive.Gamma10 = Gamma10;
    s.drive.nTherm = n;
    s.drive.gamma10 = r.scalar("gamma10", 0.5 * Gamma10 * (1.0 + 2.0 * n));
    s.drive.Nin = drive_flux(r, Gamma10, omega10);
    try {
        s.drive.validate();
        residual_dephasing(s.drive);
    } catch (const ParameterError& e) {
        r.fail("gamma10", e.what());
    }
    const int points = require_points(r, "delta_points", 201, 1);
    s.deltaOverGamma10 = linear_grid(r.scalar("delta_min", -10.0), r.scalar("delta_max", 10.0), points);
    s.method = r.choose<TwoLevelMethod>(
        "method", {{"analytic", TwoLevelMethod::Analytic}, {"numeric", TwoLevelMethod::Numeric}, {"both", TwoLevelMethod::Both}},
        s.T > 0.0 ? TwoLevelMethod::Numeric : TwoLevelMethod::Both);
    if (s.T > 0.0 && s.method != TwoLevelMethod::Numeric) {
        r.fail("method", "the analytic coefficients are zero-temperature only; use method = numeric");
    }
    return s;
}

ThreeLevelSetup resolve_three_level(const Resolver& r) {
    ThreeLevelSetup s;
    ThreeLevelDrive& d = s.drive;
    d.Gamma10 = r.required("Gamma10");
    if (!(d.Gamma10 > 0.0)) {
        r.fail("Gamma10", "must be positive");
    }
    d.Gamma21 = r.scalar("Gamma21", 2.0 * d.Gamma10);
    const double T = r.scalar("T", 0.0);
    if (T < 0.0) {
        r.fail("T", "must be non-negative");
    }
    if (T > 0.0) {
        if (!r.has("f10") || !r.has("f21")) {
            r.fail("T", "finite temperature needs f10 and f21 for the thermal occupations");
        }
        d.nTherm10 = thermal_occupation(r.scalar("f10"), T);
        d.nTherm21 = thermal_occupation(r.scalar("f21"), T);
    }
    const double out0 = d.Gamma10 * d.nTherm10;
    const double out1 = d.Gamma10 * (1.0 + d.nTherm10) + d.Gamma21 * d.nTherm21;
    const double out2 = d.Gamma21 * (1.0 + d.nTherm21);
    d.gamma10 = r.scalar("gamma10", 0.5 * (out1 + out0));
    d.gamma20 = r.scalar("gamma20", 0.5 * (out2 + out0));
    d.gamma21 = r.scalar("gamma21", 0.5 * (out2 + out1));

    const double unitFlux = d.Gamma10 / constants::two_pi;
    const double probeRel = r.scalar("NinP", 1e-4);
    if (probeRel < 0.0) {
        r.fail("NinP", "must be non-negative");
    }
    d.NinP = probeRel * unitFlux;
    d.deltaC = r.scalar("deltaC", 0.0) * d.gamma10;
    try {
        d.validate();
    } catch (const ParameterError& e) {
        throw ConfigError("gamma", 0, e.what());
    }

    s.NinCRel = r.has("NinC") ? r.list("NinC") : std::vector<double>{0.01, 1.0, 10.0};
    for (double v : s.NinCRel) {
        if (v < 0.0) {
            r.fail("NinC", "must be non-negative");
        }
    }
    const int points = require_points(r, "deltaP_points", 401, 1);
    s.deltaPOverGamma10 = linear_grid(r.scalar("deltaP_min", -10.0), r.scalar("deltaP_max", 10.0), points);

    if (r.has("NinC_sweep_points") || r.has("NinC_sweep_min") || r.has("NinC_sweep_max")) {
        const double lo = r.scalar("NinC_sweep_min", 1e-3);
        const double hi = r.scalar("NinC_sweep_max", 100.0);
        if (!(lo > 0.0) || !(hi > lo)) {
            r.fail("NinC_sweep_min", "control sweep needs 0 < min < max (log-spaced)");
        }
        s.controlSweepRel = log_grid(lo, hi, require_points(r, "NinC_sweep_points", 61, 2));
    }

    const bool analyticPossible = d.deltaC == 0.0 && T == 0.0;
    s.method = r.choose<Method>("method", {{"analytic", Method::Analytic}, {"numeric", Method::Numeric}},
                                analyticPossible ? Method::Analytic : Method::Numeric);
    if (s.method == Method::Analytic && !analyticPossible) {
        r.fail("method", "the analytic probe response needs a resonant control at zero temperature");
    }
    return s;
}

G2Setup resolve_g2(const Resolver& r) {
    G2Setup s;
    G2Config& c = s.base;
    c.Gamma10 = r.required("Gamma10");
    c.omega10 = r.required("f10");
    if (!(c.Gamma10 > 0.0) || !(c.omega10 > 0.0)) {
        r.fail("Gamma10", "Gamma10 and f10 must be positive");
    }
    c.Nin = drive_flux(r, c.Gamma10, c.omega10);
    c.field = r.choose<OutputField>("field", {{"reflected", OutputField::Reflected}, {"transmitted", OutputField::Transmitted}},
                                    OutputField::Reflected);
    c.filtered = r.choose<bool>("filtered", {{"true", true}, {"false", false}, {"yes", true}, {"no", false}}, true);
    c.nFock = require_points(r, "nFock", 8, 2);
    c.thermalFactor = r.choose<ResonatorThermalFactor>(
        "thermal_factor", {{"half", ResonatorThermalFactor::HalfOccupation}, {"full", ResonatorThermalFactor::FullOccupation}},
        ResonatorThermalFactor::HalfOccupation);
    const double tauMax = r.scalar("tau_max", 200e-9);
    if (!(tauMax > 0.0)) {
        r.fail("tau_max", "must be positive");
    }
    c.tauGrid = linear_grid(0.0, tauMax, require_points(r, "tau_points", 400, 2));

    const std::vector<double> temps = r.has("T") ? r.list("T") : std::vector<double>{0.0};
    for (double t : temps) {
        if (t < 0.0) {
            r.fail("T", "must be non-negative");
        }
    }
    if (!c.filtered) {
        if (r.has("BW")) {
            r.fail("BW", "not used when filtered = false");
        }
        if (c.field != OutputField::Reflected) {
            r.fail("field", "the unfiltered correlation is available for the reflected field only");
        }
        for (double t : temps) {
            s.curves.emplace_back(t, 0.0);
        }
        return s;
    }
    if (!r.has("BW")) {
        throw ConfigError("BW", 0, "missing required key 'BW' (with unit suffix " + unit_list(Dim::Frequency) +
                                       ") for a filtered g2");
    }
    const std::vector<double> bws = r.list("BW");
    for (double b : bws) {
        if (!(b > 0.0)) {
            r.fail("BW", "must be positive");
        }
    }
    const bool zip = r.choose<bool>("combine", {{"product", false}, {"zip", true}}, false);
    if (zip) {
        if (temps.size() != bws.size()) {
            r.fail("combine", "zip needs T and BW lists of equal length");
        }
        for (std::size_t i = 0; i < temps.size(); ++i) {
            s.curves.emplace_back(temps[i], bws[i]);
        }
    } else {
        for (double t : temps) {
            for (double b : bws) {
                s.curves.emplace_back(t, b);
            }
        }
    }
    return s;
}

} // namespace

Scenario parse_scenario(std::string_view name) {
    if (name == "spectrum") return Scenario::Spectrum;
    if (name == "two-level") return Scenario::TwoLevel;
    if (name == "three-level") return Scenario::ThreeLevel;
    if (name == "g2") return Scenario::G2;
    throw ConfigError("scenario", 0,
                      "unknown scenario '" + std::string(name) + "' (expected spectrum, two-level, three-level or g2)");
}

std::string_view scenario_name(Scenario s) {
    switch (s) {
    case Scenario::Spectrum: return "spectrum";
    case Scenario::TwoLevel: return "two-level";
    case Scenario::ThreeLevel: return "three-level";
    case Scenario::G2: return "g2";
    }
    return "?";
}

RunConfig parse_config(std::string_view text, std::optional<Scenario> scenario) {
    std::map<std::string, Entry> entries;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineNo = 0;
    while (std::getline(in, raw)) {
        ++lineNo;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(line, lineNo, "line " + std::to_string(lineNo) + ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("", lineNo, "line " + std::to_string(lineNo) + ": missing key before '='");
        }
        Entry e = classify(key, value, lineNo);
        if (value.empty()) {
            throw ConfigError(key, lineNo, "missing value for key '" + key + "' at line " + std::to_string(lineNo));
        }
        if (auto it = entries.find(e.base); it != entries.end()) {
            throw ConfigError(key, lineNo,
                              "duplicate key '" + key + "' at line " + std::to_string(lineNo) + " (first given as '" +
                                  it->second.key + "' at line " + std::to_string(it->second.line) + ")");
        }
        entries.emplace(e.base, std::move(e));
    }

    RunConfig cfg;
    if (auto it = entries.find("scenario"); it != entries.end()) {
        const Scenario fromFile = parse_scenario(it->second.value);
        if (scenario && *scenario != fromFile) {
            throw ConfigError("scenario", it->second.line,
                              "config declares scenario '" + std::string(scenario_name(fromFile)) + "' at line " +
                                  std::to_string(it->second.line) + " but '" + std::string(scenario_name(*scenario)) +
                                  "' was requested");
        }
        cfg.scenario = fromFile;
    } else if (scenario) {
        cfg.scenario = *scenario;
    } else {
        throw ConfigError("scenario", 0, "missing required key 'scenario'");
    }

    const Resolver r(std::move(entries), cfg.scenario);
    cfg.outputPath = r.word("output", "");
    cfg.format = r.choose<OutputFormat>("format", {{"csv", OutputFormat::Csv}, {"csv+plotscript", OutputFormat::CsvWithPlotScript}},
                                        OutputFormat::Csv);
    switch (cfg.scenario) {
    case Scenario::Spectrum: cfg.spectrum = resolve_spectrum(r); break;
    case Scenario::TwoLevel: cfg.twoLevel = resolve_two_level(r); break;
    case Scenario::ThreeLevel: cfg.threeLevel = resolve_three_level(r); break;
    case Scenario::G2: cfg.g2 = resolve_g2(r); break;
    }
    return cfg;
}

std::string describe_columns() {
    return "CSV columns per scenario:\n"
           "  spectrum     level_idx, f_GHz (omega_k/2pi), X_k_km1_e (|<k|X|k-1>| in units of e),\n"
           "               Gamma_k_km1_MHz (relaxation k->k-1 over 2pi), Gamma_km1_k_MHz (excitation),\n"
           "               GammaPhi_MHz (pure dephasing), gamma_k_km1_MHz (coherence decay), eps_MHz (dispersion/h)\n"
           "  two-level    delta_over_gamma10, delta_MHz, Re_r, Im_r, R, T\n"
           "               [+ Re_r_numeric, Im_r_numeric, R_numeric, T_numeric with method = both]\n"
           "  three-level  sweep (detuning|control), deltaP_over_gamma10, NinC_rel, Re_r, Im_r, T_p\n"
           "  g2           T_mK, BW_MHz (inf when unfiltered), tau_ns, g2\n"
           "Dimensionless columns: r, R, T, T_p, g2; *_rel and *_over_gamma10 are ratios.\n";
}

} // namespace wqed
