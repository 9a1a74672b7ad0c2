#include "wqed/config.hpp"
#include "wqed/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"Scattering of coherent microwaves on a transmon in an open transmission line.\n"
                 "Parallel sweeps use up to WQED_THREADS worker threads (default: hardware concurrency)."};
    app.name("wqed-scatter");

    std::string scenario;
    std::string configPath;
    std::string outPath;
    bool emitPlot = false;
    app.add_option("scenario", scenario, "spectrum | two-level | three-level | g2")
        ->required()
        ->check(CLI::IsMember({"spectrum", "two-level", "three-level", "g2"}));
    app.add_option("--config", configPath, "key = value configuration file")->required()->check(CLI::ExistingFile);
    app.add_option("--out", outPath, "CSV output path (default: config `output`, else stdout)");
    app.add_flag("--emit-plot", emitPlot, "also write <stem>_plot.py (matplotlib) next to the CSV");
    app.footer(wqed::describe_columns());

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(configPath, std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    if (!in) {
        std::cerr << "wqed-scatter: cannot read " << configPath << '\n';
        return 1;
    }

    wqed::RunConfig cfg;
    try {
        cfg = wqed::parse_config(text.str(), wqed::parse_scenario(scenario));
    } catch (const wqed::Error& e) {
        std::cerr << "wqed-scatter: " << configPath << ": " << e.what() << '\n';
        return 1;
    }
    if (!outPath.empty()) {
        cfg.outputPath = outPath;
    }
    if (emitPlot) {
        cfg.format = wqed::OutputFormat::CsvWithPlotScript;
    }
    return wqed::run(cfg, std::cout, std::cerr);
}
