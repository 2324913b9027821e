#include "extremal/known_assets.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "extremal/evaluate.hpp"
#include "extremal/hash.hpp"
#include "extremal/json_io.hpp"
#include "extremal/registry.hpp"

namespace extremal {

namespace {

std::string read_file_bytes(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read data file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

std::string fmt(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

// First mismatch between the evaluation and the expected envelope, or
// nullopt when everything holds.
std::optional<std::string> check_expectations(const nlohmann::json &expect,
                                              const EvalResult &result) {
    if (expect.at("valid").get<bool>() != result.valid)
        return "validity mismatch: expected " +
               std::string(expect.at("valid").get<bool>() ? "valid" : "invalid") + ", got " +
               (result.valid ? "valid" : "invalid") +
               (result.reason.empty() ? "" : " (" + result.reason + ")");
    if (expect.contains("raw_range")) {
        const double lo = expect["raw_range"].at(0).get<double>();
        const double hi = expect["raw_range"].at(1).get<double>();
        if (!(result.raw_metric >= lo && result.raw_metric <= hi))
            return "raw metric " + fmt(result.raw_metric) + " outside [" + fmt(lo) + ", " +
                   fmt(hi) + "]";
    }
    if (expect.contains("raw_exact")) {
        const double target = expect["raw_exact"].get<double>();
        const double tol = expect.value("raw_tol", 1e-12);
        if (!(std::abs(result.raw_metric - target) <= tol))
            return "raw metric " + fmt(result.raw_metric) + " != " + fmt(target) +
                   " (tol " + fmt(tol) + ")";
    }
    if (expect.contains("raw_max") && !(result.raw_metric <= expect["raw_max"].get<double>()))
        return "raw metric " + fmt(result.raw_metric) + " exceeds " +
               fmt(expect["raw_max"].get<double>());
    if (expect.contains("score_min") && !(result.score >= expect["score_min"].get<double>()))
        return "score " + fmt(result.score) + " below " + fmt(expect["score_min"].get<double>());
    if (expect.contains("metrics")) {
        for (const auto &[name, pair] : expect["metrics"].items()) {
            const double target = pair.at(0).get<double>();
            const double tol = pair.at(1).get<double>();
            const auto found = result.metrics.find(name);
            if (found == result.metrics.end())
                return "metric \"" + name + "\" missing from the evaluation";
            if (!(std::abs(found->second - target) <= tol))
                return "metric \"" + name + "\" = " + fmt(found->second) + " != " +
                       fmt(target) + " (tol " + fmt(tol) + ")";
        }
    }
    return std::nullopt;
}

KnownAssetReport check_entry(const std::filesystem::path &data_dir,
                             const nlohmann::json &entry) {
    KnownAssetReport report;
    report.name = entry.at("name").get<std::string>();
    const std::string problem_id = entry.at("problem").get<std::string>();
    const std::string file = entry.at("file").get<std::string>();
    const std::string recorded = entry.at("fnv1a64").get<std::string>();
    const nlohmann::json &expect = entry.at("expect");

    const std::optional<ProblemSpec> problem = find_problem(problem_id);
    if (!problem)
        throw std::runtime_error("manifest entry \"" + report.name +
                                 "\" names an unknown problem: " + problem_id);

    const std::string bytes = read_file_bytes(data_dir / file);
    const std::string computed = fnv1a64_hex(bytes);
    if (computed != recorded) {
        report.detail = "checksum mismatch for " + file + ": manifest " + recorded +
                        ", file " + computed;
        return report;
    }

    SolutionPayload payload;
    try {
        payload = payload_from_json(problem->payload_kind,
                                    nlohmann::json::parse(bytes));
    } catch (const std::exception &e) {
        report.detail = "payload no longer parses (" + std::string(e.what()) + ")";
        return report;
    }

    const EvalResult result = evaluate_payload(*problem, payload);
    if (std::optional<std::string> mismatch = check_expectations(expect, result)) {
        report.detail = *mismatch;
        return report;
    }
    report.passed = true;
    report.detail = "raw=" + fmt(result.raw_metric) + " score=" + fmt(result.score);
    return report;
}

} // namespace

VerificationSummary verify_known_assets(const std::filesystem::path &data_dir) {
    const std::filesystem::path manifest_path = data_dir / "manifest.json";
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(read_file_bytes(manifest_path));
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error("malformed manifest " + manifest_path.string() + ": " +
                                 e.what());
    }
    if (!manifest.is_object() || !manifest.contains("assets") ||
        !manifest["assets"].is_array() || manifest["assets"].empty())
        throw std::runtime_error("manifest has no \"assets\" entries: " +
                                 manifest_path.string());

    VerificationSummary summary;
    for (const nlohmann::json &entry : manifest["assets"]) {
        try {
            summary.reports.push_back(check_entry(data_dir, entry));
        } catch (const nlohmann::json::exception &e) {
            throw std::runtime_error("malformed manifest entry in " + manifest_path.string() +
                                     ": " + e.what());
        }
    }
    return summary;
}

} // namespace extremal
