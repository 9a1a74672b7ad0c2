#pragma once

#include "wqed/config.hpp"

#include <iosfwd>
#include <string>

namespace wqed {

struct RunOutput {
    std::string csv;
    std::string plotScript;  // empty unless requested
};

// Evaluates the configured scenario. Identical configs give byte-identical output.
RunOutput execute(const RunConfig& cfg);

// Python/matplotlib script that renders csvPath in the layout of the scenario.
std::string plot_script(Scenario scenario, const std::string& csvPath);

// Executes and writes the CSV (and plot script) to cfg.outputPath or `out`.
// Returns 0 on success; library errors are reported on `err` with status 1.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace wqed
