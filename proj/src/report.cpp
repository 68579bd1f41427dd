#include "sga/report.hpp"

#include <chrono>
#include <ctime>

#include <json.hpp>

namespace sga {
namespace {

nlohmann::json result_json(const IdentityResult& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["max_abs_error"] = r.max_abs_error;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["asserted"] = r.asserted;
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.worst_point.empty()) j["worst_point"] = r.worst_point;
    return j;
}

nlohmann::json report_json(const Report& report) {
    nlohmann::json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["samples"] = report.samples;
    j["pass"] = report.pass();
    j["results"] = nlohmann::json::array();
    for (const auto& r : report.results) j["results"].push_back(result_json(r));
    return j;
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string report_to_json(const Report& report, bool with_timestamp) {
    nlohmann::json j = report_json(report);
    j["schema"] = 1;
    if (with_timestamp) j["generated_at"] = timestamp_utc();
    return j.dump(2);
}

std::string reports_to_json(const std::vector<Report>& reports, std::uint64_t seed,
                            bool with_timestamp) {
    nlohmann::json j;
    j["schema"] = 1;
    j["seed"] = seed;
    bool all = true;
    j["suites"] = nlohmann::json::array();
    for (const auto& r : reports) {
        all = all && r.pass();
        j["suites"].push_back(report_json(r));
    }
    j["pass"] = all;
    if (with_timestamp) j["generated_at"] = timestamp_utc();
    return j.dump(2);
}

}  // namespace sga
