#include "sga/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "sga/diffops.hpp"
#include "sga/frames.hpp"
#include "sga/harmonics.hpp"
#include "sga/monogenic.hpp"
#include "sga/symmetry.hpp"

namespace sga {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> kNames = {
        "identities", "identities-grad", "brackets",  "jx2",
        "laplacian-equiv", "monogenic",  "harmonics", "all"};
    return kNames;
}

bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<Report> run_suites(const std::string& name, const SuiteOptions& opts) {
    std::vector<Report> out;
    const bool all = name == "all";
    const double tol_closed = opts.tolerance > 0 ? opts.tolerance : 1e-8;
    const double tol_fd = opts.tolerance > 0 ? opts.tolerance : 1e-5;
    const double fd_step = opts.fd_step > 0 ? opts.fd_step : 1e-5;

    if (all || name == "identities")
        out.push_back(frames_identity_suite(opts.seed, opts.samples, tol_closed, tol_fd, fd_step));
    if (all || name == "identities-grad")
        out.push_back(gradient_identity_suite(opts.seed, opts.samples));
    if (all || name == "brackets") {
        out.push_back(symmetry_bracket_suite(opts.seed, opts.samples));
        out.push_back(harmonicity_suite(opts.seed, opts.samples));
    }
    if (all || name == "jx2") out.push_back(jx_square_suite(opts.seed, opts.samples));
    if (all || name == "laplacian-equiv")
        out.push_back(laplacian_equivalence_suite(opts.seed, opts.samples));
    if (all || name == "monogenic") out.push_back(monogenic_suite(opts.seed, opts.samples));
    if (all || name == "harmonics") out.push_back(harmonics_suite(opts.seed, opts.samples));

    if (out.empty()) throw std::invalid_argument("unknown suite: " + name);
    return out;
}

}  // namespace sga
