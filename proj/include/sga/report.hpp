#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sga {

// One verified (or informationally evaluated) identity. Entries with
// asserted=false record the measured value of a known-broken printed variant
// or an empirically determined closed form; they never fail a suite.
struct IdentityResult {
    std::string name;
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    bool asserted = true;
    std::string note;
    std::string worst_point;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<IdentityResult> results;

    IdentityResult& add(const std::string& name, double err, double tol,
                        const std::string& worst = "") {
        IdentityResult r;
        r.name = name;
        r.max_abs_error = err;
        r.tolerance = tol;
        r.pass = err <= tol;
        r.worst_point = worst;
        results.push_back(r);
        return results.back();
    }

    IdentityResult& add_info(const std::string& name, double value, const std::string& note) {
        IdentityResult r;
        r.name = name;
        r.max_abs_error = value;
        r.asserted = false;
        r.pass = true;
        r.note = note;
        results.push_back(r);
        return results.back();
    }

    IdentityResult& add_flag(const std::string& name, bool ok, const std::string& note = "") {
        IdentityResult r;
        r.name = name;
        r.max_abs_error = ok ? 0.0 : 1.0;
        r.pass = ok;
        r.note = note;
        results.push_back(r);
        return results.back();
    }

    bool pass() const {
        for (const auto& r : results)
            if (r.asserted && !r.pass) return false;
        return true;
    }
};

std::string report_to_json(const Report& report, bool with_timestamp);
std::string reports_to_json(const std::vector<Report>& reports, std::uint64_t seed,
                            bool with_timestamp);

}  // namespace sga
