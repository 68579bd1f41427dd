#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sga/report.hpp"

namespace sga {

struct SuiteOptions {
    std::uint64_t seed = 12345;
    int samples = 200;
    // Overrides for the chart identity suite; negative means "use defaults".
    double tolerance = -1.0;
    double fd_step = -1.0;
};

// Names accepted by run_suites, in canonical order. "all" expands to the rest.
const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);

// Runs the named suite ("all" runs everything) and returns one report per
// underlying property group. Throws std::invalid_argument on unknown names.
std::vector<Report> run_suites(const std::string& name, const SuiteOptions& opts);

}  // namespace sga
