// Command-line front end: verification suites plus data emitters for the
// coordinate transforms, the spheroid projection, separated harmonic modes,
// the axial power family and the Cauchy kernel.
//
// Exit codes: 0 success / all suites pass, 1 suite failure, 2 usage or
// validation error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sga/harmonics.hpp"
#include "sga/monogenic.hpp"
#include "sga/projection.hpp"
#include "sga/spheroidal.hpp"
#include "sga/suites.hpp"

namespace {

using nlohmann::json;

void write_text(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << content;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return out;
}

sga::SpheroidalCase parse_case(const std::string& s) {
    if (s == "prolate") return sga::SpheroidalCase::prolate;
    if (s == "oblate") return sga::SpheroidalCase::oblate;
    throw std::runtime_error("unknown coordinate case: " + s);
}

int cmd_verify(const std::string& suite, const sga::SuiteOptions& opts, const std::string& out,
               bool with_timestamp) {
    const std::vector<sga::Report> reports = sga::run_suites(suite, opts);
    bool all_pass = true;
    for (const auto& rep : reports) {
        for (const auto& r : rep.results) {
            if (!r.asserted || r.pass) continue;
            all_pass = false;
            std::cerr << "FAIL " << rep.suite << "/" << r.name << "  max_abs_error=" << r.max_abs_error
                      << "  tolerance=" << r.tolerance;
            if (!r.worst_point.empty()) std::cerr << "  at " << r.worst_point;
            std::cerr << '\n';
        }
    }
    write_text(out, sga::reports_to_json(reports, opts.seed, with_timestamp));
    return all_pass ? 0 : 1;
}

int cmd_transform(const std::string& case_override, double mu_override, bool inverse,
                  const std::string& in, const std::string& out) {
    std::istringstream source_buffer;
    std::ifstream source_file;
    std::istream* is = nullptr;
    if (in == "-") {
        is = &std::cin;
    } else {
        source_file.open(in);
        if (!source_file) throw std::runtime_error("cannot open input file: " + in);
        is = &source_file;
    }

    std::ostringstream os;
    os << "case,mu,eta,theta,phi,x0,x1,x2\n";
    std::string line;
    std::size_t row = 0;
    while (std::getline(*is, line)) {
        ++row;
        if (line.empty()) continue;
        auto cells = split_csv(line);
        if (row == 1 && !cells.empty() && cells[0] == "case") continue;  // header
        if (cells.size() < 8) cells.resize(8);
        const std::string case_str = !case_override.empty() ? case_override : cells[0];
        if (case_str.empty())
            throw std::runtime_error("row " + std::to_string(row) + ": no coordinate case");
        const sga::SpheroidalCase kind = parse_case(case_str);
        const double mu = mu_override > 0 ? mu_override
                          : cells[1].empty() ? throw std::runtime_error(
                                                   "row " + std::to_string(row) + ": no mu")
                                             : std::stod(cells[1]);
        if (inverse) {
            const sga::CartesianPoint x{std::stod(cells[5]), std::stod(cells[6]),
                                        std::stod(cells[7])};
            const sga::SpheroidalPoint p = sga::invert(x, mu, kind);
            os << sga::to_string(kind) << ',' << fmt(mu) << ',' << fmt(p.eta) << ',' << fmt(p.theta)
               << ',' << fmt(p.phi) << ',' << fmt(x.x0) << ',' << fmt(x.x1) << ',' << fmt(x.x2)
               << '\n';
        } else {
            const sga::SpheroidalPoint p{kind, mu, std::stod(cells[2]), std::stod(cells[3]),
                                         std::stod(cells[4])};
            const sga::CartesianPoint x = sga::position(p);
            os << sga::to_string(kind) << ',' << fmt(mu) << ',' << fmt(p.eta) << ',' << fmt(p.theta)
               << ',' << fmt(p.phi) << ',' << fmt(x.x0) << ',' << fmt(x.x1) << ',' << fmt(x.x2)
               << '\n';
        }
    }
    write_text(out, os.str());
    return 0;
}

int cmd_project(int case_id, double nu, int grid, const std::string& out) {
    std::ostringstream os;
    os << "theta,phi,t,phi_out\n";
    for (int i = 0; i < grid; ++i) {
        const double theta = (i + 0.5) * M_PI / grid;
        for (int j = 0; j < grid; ++j) {
            const double phi = j * 2.0 * M_PI / grid;
            const sga::CartesianPoint x = sga::bounding_point(case_id, nu, theta, phi);
            const sga::PlanePoint t = sga::project(x, nu, case_id);
            os << fmt(theta) << ',' << fmt(phi) << ',' << fmt(t.t) << ',' << fmt(t.phi) << '\n';
        }
    }
    write_text(out, os.str());
    return 0;
}

int cmd_harmonic(const std::string& case_str, const std::string& kind_str, int n, int m,
                 const std::string& parity, int grid, double mu, const std::string& out,
                 const std::string& residual_out) {
    sga::HarmonicMode mode;
    mode.kind = parse_case(case_str);
    if (kind_str != "interior" && kind_str != "exterior")
        throw std::runtime_error("kind must be interior or exterior");
    mode.exterior = kind_str == "exterior";
    if (m > n) throw std::runtime_error("order m must satisfy m <= n");
    mode.n = n;
    mode.m = m;
    if (parity != "even" && parity != "odd") throw std::runtime_error("parity must be even or odd");
    mode.sine = parity == "odd";

    const double eta_lo = mode.exterior ? 0.5 : 0.3;
    const double eta_hi = mode.exterior ? 2.0 : 1.5;
    std::ostringstream os;
    os << "eta,theta,phi,x0,x1,x2,U\n";
    double max_residual = 0.0;
    int residual_samples = 0;
    for (int i = 0; i < grid; ++i) {
        const double eta = eta_lo + (eta_hi - eta_lo) * (i + 0.5) / grid;
        for (int j = 0; j < grid; ++j) {
            const double theta = 0.3 + (M_PI - 0.6) * (j + 0.5) / grid;
            const double phi = 2.0 * M_PI * j / grid;
            const sga::SpheroidalPoint p{mode.kind, mu, eta, theta, phi};
            const sga::CartesianPoint x = sga::position(p);
            const double u = sga::eval_mode(mode, eta, theta, phi);
            os << fmt(eta) << ',' << fmt(theta) << ',' << fmt(phi) << ',' << fmt(x.x0) << ','
               << fmt(x.x1) << ',' << fmt(x.x2) << ',' << fmt(u) << '\n';
            if (residual_samples < 64 && std::abs(theta - M_PI / 2) > 0.25 &&
                (i * grid + j) % std::max(1, grid * grid / 64) == 0) {
                sga::VectorField field = [&mode, mu](const sga::MvD& v) {
                    return sga::MvD::scalar(
                        3, sga::eval_mode_cartesian(mode, mu, sga::CartesianPoint::from_mv(v)));
                };
                max_residual = std::max(max_residual, sga::laplace_residual(field, x.mv()));
                ++residual_samples;
            }
        }
    }
    write_text(out, os.str());

    json summary;
    summary["schema"] = 1;
    summary["case"] = case_str;
    summary["kind"] = kind_str;
    summary["n"] = n;
    summary["m"] = m;
    summary["parity"] = parity;
    summary["mu"] = mu;
    summary["residual_samples"] = residual_samples;
    summary["max_residual"] = max_residual;
    summary["tolerance"] = 1e-5;
    summary["pass"] = max_residual < 1e-5;
    write_text(residual_out, summary.dump(2));
    return summary["pass"].get<bool>() ? 0 : 1;
}

int cmd_qm(int k, int scan_max_degree, const std::string& out) {
    const sga::MvPolynomial grad = sga::cylindrical_gradient(sga::qm_power(unsigned(k)));
    const bool curl_free = (grad - grad.grade(0)).is_zero();
    const sga::QmCorrection corr =
        sga::qm_correction_search(unsigned(k), unsigned(scan_max_degree));
    json j;
    j["schema"] = 1;
    j["k"] = k;
    j["curl_free"] = curl_free;
    j["gradient_poly"] = grad.to_string();
    j["correction_found"] = corr.found;
    j["correction"] = corr.found ? corr.correction.to_string() : "";
    if (corr.found) j["kernel_dim"] = corr.kernel_dim;
    write_text(out, j.dump(2));
    return 0;
}

int cmd_kernel(int n, const std::vector<double>& y_coords, int grid, const std::string& out) {
    const int dim = n + 1;
    sga::MvD y(dim);
    for (int k = 0; k < dim; ++k) {
        const double c = std::size_t(k) < y_coords.size() ? y_coords[std::size_t(k)] : 0.0;
        y += sga::MvD::basis_vector(dim, k) * c;
    }
    const double h = 3e-5;
    std::ostringstream os;
    for (int k = 0; k < dim; ++k) os << "x" << k << ',';
    os << "residual\n";
    for (int i = 0; i < grid; ++i) {
        const double s = -1.2 + 2.4 * (i + 0.5) / grid;
        for (int j = 0; j < grid; ++j) {
            const double t = -1.2 + 2.4 * (j + 0.5) / grid;
            sga::MvD x = y + sga::MvD::basis_vector(dim, 0) * s + sga::MvD::basis_vector(dim, 1) * t;
            const sga::MvD d = x - y;
            const double r = std::sqrt((d * d).scalar_part());
            if (r < 0.2) continue;
            sga::MvD grad(dim);
            for (int a = 0; a < dim; ++a) {
                const sga::MvD ea = sga::MvD::basis_vector(dim, a);
                grad += ea * ((sga::cauchy_kernel(x + ea * h, y) - sga::cauchy_kernel(x - ea * h, y)) *
                              (1.0 / (2 * h)));
            }
            const double residual =
                sga::norm_coefficients(grad) * r / sga::norm_coefficients(sga::cauchy_kernel(x, y));
            for (int a = 0; a < dim; ++a) os << fmt(x[1u << a]) << ',';
            os << fmt(residual) << '\n';
        }
    }
    write_text(out, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spheroidal geometric-algebra toolkit: verification suites and data emitters"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite, write a JSON report");
    std::string suite;
    sga::SuiteOptions opts;
    std::string verify_out = "-";
    bool no_timestamp = false;
    verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(sga::suite_names()));
    verify->add_option("--seed", opts.seed, "rng seed")->envname("SPHEROIDAL_GA_SEED");
    verify->add_option("--samples", opts.samples, "sample count per suite")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tolerance", opts.tolerance, "override the chart-identity tolerances")
        ->check(CLI::PositiveNumber);
    verify->add_option("--fd-step", opts.fd_step, "override the finite-difference step")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", verify_out, "report path ('-' for stdout)");
    verify->add_flag("--no-timestamp", no_timestamp,
                     "omit the generated_at field for byte-identical comparisons");

    // transform
    auto* transform = app.add_subcommand("transform", "chart <-> Cartesian CSV transform");
    std::string tr_case, tr_in, tr_out = "-";
    double tr_mu = -1;
    bool tr_inverse = false;
    transform->add_option("--case", tr_case, "prolate|oblate (overrides the CSV column)")
        ->check(CLI::IsMember({"prolate", "oblate"}));
    transform->add_option("--mu", tr_mu, "focal scale override")->check(CLI::PositiveNumber);
    transform->add_flag("--inverse", tr_inverse, "read x0,x1,x2 and recover eta,theta,phi");
    transform->add_option("--in", tr_in, "input CSV ('-' for stdin)")->required();
    transform->add_option("--out", tr_out, "output CSV ('-' for stdout)");

    // project
    auto* project = app.add_subcommand("project", "graphic projection of a unit bounding spheroid");
    int pr_case = 3, pr_grid = 64;
    double pr_nu = 0.5;
    std::string pr_out = "-";
    project->add_option("--case", pr_case, "bounding case (1 oblate or 3 prolate)")
        ->check(CLI::IsMember({1, 3}));
    project->add_option("--nu", pr_nu, "spheroid parameter nu > 0")->check(CLI::PositiveNumber);
    project->add_option("--grid", pr_grid, "grid resolution per angle")->check(CLI::PositiveNumber);
    project->add_option("--out", pr_out, "output CSV ('-' for stdout)");

    // harmonic
    auto* harmonic = app.add_subcommand("harmonic", "tabulate a separated harmonic mode");
    std::string ha_case = "prolate", ha_kind = "interior", ha_parity = "even", ha_out = "-",
                ha_res_out = "-";
    int ha_n = 0, ha_m = 0, ha_grid = 24;
    double ha_mu = 1.0;
    harmonic->add_option("--case", ha_case)->check(CLI::IsMember({"prolate", "oblate"}));
    harmonic->add_option("--kind", ha_kind)->check(CLI::IsMember({"interior", "exterior"}));
    harmonic->add_option("--n", ha_n, "degree")->required()->check(CLI::Range(0, 8));
    harmonic->add_option("--m", ha_m, "order")->check(CLI::Range(0, 8));
    harmonic->add_option("--parity", ha_parity, "azimuthal parity (even: cos, odd: sin)")
        ->check(CLI::IsMember({"even", "odd"}));
    harmonic->add_option("--grid", ha_grid)->check(CLI::PositiveNumber);
    harmonic->add_option("--mu", ha_mu, "focal scale")->check(CLI::PositiveNumber);
    harmonic->add_option("--out", ha_out, "mode CSV ('-' for stdout)");
    harmonic->add_option("--residual-out", ha_res_out, "residual summary JSON ('-' for stdout)");

    // qm
    auto* qm = app.add_subcommand("qm", "axial power family: gradient and completion search");
    int qm_k = 1, qm_scan = -1;
    std::string qm_out = "-";
    qm->add_option("--k", qm_k, "power")->required()->check(CLI::Range(1, 15));
    qm->add_option("--scan-max-degree", qm_scan, "completion search degree bound (default k)");
    qm->add_option("--out", qm_out, "JSON path ('-' for stdout)");

    // kernel
    auto* kernel = app.add_subcommand("kernel", "Cauchy kernel residual scan over a plane section");
    int ke_n = 3, ke_grid = 16;
    std::vector<double> ke_y;
    std::string ke_out = "-";
    kernel->add_option("--n", ke_n, "spatial dimension count")->check(CLI::Range(2, 5));
    kernel->add_option("--y", ke_y, "singular point coordinates")->delimiter(',');
    kernel->add_option("--grid", ke_grid)->check(CLI::PositiveNumber);
    kernel->add_option("--out", ke_out, "output CSV ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(suite, opts, verify_out, !no_timestamp);
        if (transform->parsed()) return cmd_transform(tr_case, tr_mu, tr_inverse, tr_in, tr_out);
        if (project->parsed()) return cmd_project(pr_case, pr_nu, pr_grid, pr_out);
        if (harmonic->parsed())
            return cmd_harmonic(ha_case, ha_kind, ha_n, ha_m, ha_parity, ha_grid, ha_mu, ha_out,
                                ha_res_out);
        if (qm->parsed()) return cmd_qm(qm_k, qm_scan > 0 ? qm_scan : qm_k, qm_out);
        if (kernel->parsed()) return cmd_kernel(ke_n, ke_y, ke_grid, ke_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
