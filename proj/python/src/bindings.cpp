#include "wqed/config.hpp"
#include "wqed/constants.hpp"
#include "wqed/errors.hpp"
#include "wqed/g2corr.hpp"
#include "wqed/liouville.hpp"
#include "wqed/params_units.hpp"
#include "wqed/rates.hpp"
#include "wqed/run.hpp"
#include "wqed/scatter2.hpp"
#include "wqed/scatter3.hpp"
#include "wqed/transmon.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace wqed;

namespace {

std::vector<CollapseTerm> to_terms(const std::vector<std::pair<double, Operator>>& terms) {
    std::vector<CollapseTerm> out;
    out.reserve(terms.size());
    for (const auto& [rate, op] : terms) {
        out.push_back({rate, op});
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Transmon-in-waveguide scattering and photon statistics";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<ParameterError>(m, "ParameterError", error.ptr());
    py::register_exception<NumericalError>(m, "NumericalError", error.ptr());
    py::register_exception<TruncationError>(m, "TruncationError", error.ptr());
    py::register_exception<AmbiguityError>(m, "AmbiguityError", error.ptr());
    py::register_exception<UnsupportedError>(m, "UnsupportedError", error.ptr());
    py::register_exception<DivisionDomainError>(m, "DivisionDomainError", error.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", error.ptr());

    auto constants = m.def_submodule("constants", "SI constants");
    constants.attr("e") = constants::e;
    constants.attr("h") = constants::h;
    constants.attr("hbar") = constants::hbar;
    constants.attr("kB") = constants::kB;
    constants.attr("R_K") = constants::R_K;

    // Circuit parameters and unit conversion.
    py::class_<CircuitParams>(m, "CircuitParams")
        .def(py::init<>())
        .def_readwrite("Cc", &CircuitParams::Cc)
        .def_readwrite("CJ", &CircuitParams::CJ)
        .def_readwrite("EJ", &CircuitParams::EJ)
        .def_readwrite("Z0", &CircuitParams::Z0)
        .def_readwrite("T", &CircuitParams::T)
        .def_readwrite("VDC", &CircuitParams::VDC)
        .def_readwrite("nPorts", &CircuitParams::nPorts);
    py::class_<DerivedParams>(m, "DerivedParams")
        .def_readonly("CSigma", &DerivedParams::CSigma)
        .def_readonly("EC", &DerivedParams::EC)
        .def_readonly("gamma", &DerivedParams::gamma)
        .def_readonly("tauRC", &DerivedParams::tauRC)
        .def_readonly("ng", &DerivedParams::ng)
        .def_readonly("kappa", &DerivedParams::kappa)
        .def_readonly("nPorts", &DerivedParams::nPorts);
    m.def("derive_params", &derive_params, py::arg("circuit"));
    m.def("dbm_to_watts", [](double dbm) { return to_watts(DBm{dbm}).value; }, py::arg("dbm"));
    m.def("watts_to_dbm", [](double w) { return to_dbm(Watts{w}).value; }, py::arg("watts"));
    m.def("power_to_flux", [](double watts, double omega) { return power_to_flux(Watts{watts}, omega); },
          py::arg("watts"), py::arg("omega"));
    m.def("flux_to_rabi", &flux_to_rabi, py::arg("Nin"), py::arg("Gamma"));
    m.def("thermal_occupation", &thermal_occupation, py::arg("omega"), py::arg("T"));

    // Transmon spectrum.
    py::class_<TransmonSpectrum>(m, "TransmonSpectrum")
        .def_readonly("omegas", &TransmonSpectrum::omegas)
        .def_readonly("charge_me", &TransmonSpectrum::chargeME)
        .def_readonly("epsilons", &TransmonSpectrum::epsilons)
        .def_readonly("ground_energy", &TransmonSpectrum::groundEnergy)
        .def_readonly("n_cut", &TransmonSpectrum::nCut);
    m.def("solve_transmon", &solve_transmon, py::arg("EC"), py::arg("EJ"), py::arg("ng"), py::arg("n_levels"),
          py::arg("n_cut") = 0);
    m.def("charge_dispersion", &charge_dispersion, py::arg("EC"), py::arg("EJ"), py::arg("k"));

    // Two-level scattering.
    py::class_<DriveSpec>(m, "DriveSpec")
        .def(py::init<>())
        .def_readwrite("Nin", &DriveSpec::Nin)
        .def_readwrite("delta", &DriveSpec::delta)
        .def_readwrite("Gamma10", &DriveSpec::Gamma10)
        .def_readwrite("gamma10", &DriveSpec::gamma10)
        .def_readwrite("nTherm", &DriveSpec::nTherm);
    py::class_<ScatterResult>(m, "ScatterResult")
        .def_readonly("r", &ScatterResult::r)
        .def_readonly("t", &ScatterResult::t)
        .def_readonly("R", &ScatterResult::R)
        .def_readonly("T", &ScatterResult::T);
    py::enum_<Method>(m, "Method").value("Analytic", Method::Analytic).value("Numeric", Method::Numeric);
    m.def("analytic_rt", &analytic_rt, py::arg("drive"));
    m.def("numeric_rt", &numeric_rt, py::arg("drive"));
    m.def("sweep_two_level", &sweep_two_level, py::arg("deltas"), py::arg("base"), py::arg("method"),
          py::call_guard<py::gil_scoped_release>());

    // Three-level scattering.
    py::class_<ThreeLevelDrive>(m, "ThreeLevelDrive")
        .def(py::init<>())
        .def_static("without_pure_dephasing", &ThreeLevelDrive::without_pure_dephasing, py::arg("Gamma10"),
                    py::arg("NinP"), py::arg("NinC"))
        .def_readwrite("NinP", &ThreeLevelDrive::NinP)
        .def_readwrite("NinC", &ThreeLevelDrive::NinC)
        .def_readwrite("deltaP", &ThreeLevelDrive::deltaP)
        .def_readwrite("deltaC", &ThreeLevelDrive::deltaC)
        .def_readwrite("Gamma10", &ThreeLevelDrive::Gamma10)
        .def_readwrite("Gamma21", &ThreeLevelDrive::Gamma21)
        .def_readwrite("gamma10", &ThreeLevelDrive::gamma10)
        .def_readwrite("gamma20", &ThreeLevelDrive::gamma20)
        .def_readwrite("gamma21", &ThreeLevelDrive::gamma21)
        .def_readwrite("nTherm10", &ThreeLevelDrive::nTherm10)
        .def_readwrite("nTherm21", &ThreeLevelDrive::nTherm21);
    m.def("analytic_r_probe", &analytic_r_probe, py::arg("drive"));
    m.def("numeric_r_probe", &numeric_r_probe, py::arg("drive"));
    m.def("numeric_r_control", &numeric_r_control, py::arg("drive"));

    // Photon statistics.
    py::enum_<OutputField>(m, "OutputField")
        .value("Reflected", OutputField::Reflected)
        .value("Transmitted", OutputField::Transmitted);
    py::enum_<ResonatorThermalFactor>(m, "ResonatorThermalFactor")
        .value("HalfOccupation", ResonatorThermalFactor::HalfOccupation)
        .value("FullOccupation", ResonatorThermalFactor::FullOccupation);
    py::class_<G2Config>(m, "G2Config")
        .def(py::init<>())
        .def_readwrite("field", &G2Config::field)
        .def_readwrite("filtered", &G2Config::filtered)
        .def_readwrite("gammaBW", &G2Config::gammaBW)
        .def_readwrite("nFock", &G2Config::nFock)
        .def_readwrite("autoFock", &G2Config::autoFock)
        .def_readwrite("T", &G2Config::T)
        .def_readwrite("Gamma10", &G2Config::Gamma10)
        .def_readwrite("omega10", &G2Config::omega10)
        .def_readwrite("Nin", &G2Config::Nin)
        .def_readwrite("tauGrid", &G2Config::tauGrid)
        .def_readwrite("thermalFactor", &G2Config::thermalFactor);
    py::class_<G2Curve>(m, "G2Curve").def_readonly("taus", &G2Curve::taus).def_readonly("values", &G2Curve::values);
    m.def("g2_filtered", &g2_filtered, py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def("g2_unfiltered", &g2_unfiltered, py::arg("config"), py::call_guard<py::gil_scoped_release>());

    // Master-equation engine on plain matrices.
    m.def(
        "liouvillian",
        [](const Operator& H, const std::vector<std::pair<double, Operator>>& terms) {
            return build_liouvillian(H, to_terms(terms)).matrix();
        },
        py::arg("H"), py::arg("terms"), "Column-stacked generator for H (rad/s) and (rate, operator) pairs");
    m.def(
        "steady_state",
        [](const Operator& H, const std::vector<std::pair<double, Operator>>& terms) {
            return steady_state(build_liouvillian(H, to_terms(terms))).matrix();
        },
        py::arg("H"), py::arg("terms"));
    m.def(
        "two_time_g2",
        [](const Operator& H, const std::vector<std::pair<double, Operator>>& terms, const Operator& a,
           const std::vector<double>& taus) {
            return two_time_g2(build_liouvillian(H, to_terms(terms)), a, taus).values;
        },
        py::arg("H"), py::arg("terms"), py::arg("a"), py::arg("taus"));

    // Scenario runner.
    m.def(
        "run_scenario",
        [](const std::string& text, std::optional<std::string> scenario) {
            std::optional<Scenario> s;
            if (scenario) {
                s = parse_scenario(*scenario);
            }
            RunConfig cfg = parse_config(text, s);
            py::gil_scoped_release release;
            return execute(cfg).csv;
        },
        py::arg("config_text"), py::arg("scenario") = py::none(), "Parses a config and returns the CSV text");
    m.def("describe_columns", &describe_columns);
}
