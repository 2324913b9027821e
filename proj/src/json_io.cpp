#include "extremal/json_io.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "extremal/scoring.hpp"

namespace extremal {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &what) {
    throw std::runtime_error("payload json: " + what);
}

json number_or_inf_tag(double value) {
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    return value;
}

double parse_number_or_inf_tag(const json &node, const char *field) {
    if (node.is_number())
        return node.get<double>();
    if (node.is_string()) {
        const auto &text = node.get_ref<const std::string &>();
        if (text == "inf")
            return std::numeric_limits<double>::infinity();
        if (text == "-inf")
            return -std::numeric_limits<double>::infinity();
    }
    throw std::runtime_error(std::string("expected number or inf tag for '") + field + "'");
}

std::vector<double> parse_number_array(const json &node, const char *field) {
    if (!node.is_array())
        fail(std::string("'") + field + "' must be an array");
    std::vector<double> values;
    values.reserve(node.size());
    for (const auto &entry : node) {
        if (!entry.is_number())
            fail(std::string("'") + field + "' entries must be numbers");
        values.push_back(entry.get<double>());
    }
    return values;
}

std::vector<int> parse_int_array(const json &node, const char *field, int lo, int hi) {
    if (!node.is_array())
        fail(std::string("'") + field + "' must be an array");
    std::vector<int> values;
    values.reserve(node.size());
    for (const auto &entry : node) {
        if (!entry.is_number_integer())
            fail(std::string("'") + field + "' entries must be integers");
        const int v = entry.get<int>();
        if (v < lo || v > hi)
            fail(std::string("'") + field + "' entry out of range");
        values.push_back(v);
    }
    return values;
}

std::vector<std::vector<double>> parse_point_rows(const json &node) {
    if (!node.is_array())
        fail("'points' must be an array of coordinate rows");
    std::vector<std::vector<double>> rows;
    rows.reserve(node.size());
    for (const auto &row : node)
        rows.push_back(parse_number_array(row, "points"));
    for (const auto &row : rows)
        if (row.size() != rows.front().size())
            fail("'points' rows must all share one dimension");
    return rows;
}

const json &require_field(const json &doc, const char *field) {
    if (!doc.is_object())
        fail("document must be an object");
    auto it = doc.find(field);
    if (it == doc.end())
        fail(std::string("missing '") + field + "'");
    return *it;
}

} // namespace

json payload_to_json(const SolutionPayload &payload) {
    json doc = json::object();
    std::visit(
        [&doc](const auto &value) {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Circles>) {
                json rows = json::array();
                for (const auto &c : value.circles)
                    rows.push_back(json::array({c.x, c.y, c.r}));
                doc["circles"] = std::move(rows);
            } else if constexpr (std::is_same_v<T, PlanarPoints> ||
                                 std::is_same_v<T, SpherePoints>) {
                doc["points"] = value.points;
            } else if constexpr (std::is_same_v<T, StepHeights> ||
                                 std::is_same_v<T, SignedHeights>) {
                doc["heights"] = value.heights;
            } else if constexpr (std::is_same_v<T, SignSequence>) {
                doc["signs"] = value.signs;
            } else {
                doc["indicators"] = value.indicators;
            }
        },
        payload);
    return doc;
}

SolutionPayload payload_from_json(PayloadKind kind, const json &doc) {
    switch (kind) {
    case PayloadKind::Circles: {
        const json &node = require_field(doc, "circles");
        if (!node.is_array())
            fail("'circles' must be an array");
        Circles out;
        out.circles.reserve(node.size());
        for (const auto &row : node) {
            const auto values = parse_number_array(row, "circles");
            if (values.size() != 3)
                fail("each circle must be [x, y, r]");
            out.circles.push_back({values[0], values[1], values[2]});
        }
        return out;
    }
    case PayloadKind::PlanarPoints:
        return PlanarPoints{parse_point_rows(require_field(doc, "points"))};
    case PayloadKind::SpherePoints: {
        auto rows = parse_point_rows(require_field(doc, "points"));
        for (const auto &row : rows)
            if (row.size() != 3)
                fail("sphere points must have three coordinates");
        return SpherePoints{std::move(rows)};
    }
    case PayloadKind::StepHeights:
        return StepHeights{parse_number_array(require_field(doc, "heights"), "heights")};
    case PayloadKind::SignedHeights:
        return SignedHeights{parse_number_array(require_field(doc, "heights"), "heights")};
    case PayloadKind::SignSequence: {
        auto signs = parse_int_array(require_field(doc, "signs"), "signs", -1, 1);
        for (int s : signs)
            if (s == 0)
                fail("'signs' entries must be +1 or -1");
        return SignSequence{std::move(signs)};
    }
    case PayloadKind::IndicatorSet:
        return IndicatorSet{parse_int_array(require_field(doc, "indicators"), "indicators", 0, 1)};
    }
    fail("unknown payload kind");
}

json result_to_json(const EvalResult &result) {
    json doc;
    doc["valid"] = result.valid;
    doc["raw_metric"] = number_or_inf_tag(result.raw_metric);
    doc["score"] = result.score;
    doc["metrics"] = result.metrics;
    if (!result.reason.empty())
        doc["reason"] = result.reason;
    return doc;
}

EvalResult result_from_json(const json &doc) {
    EvalResult result;
    result.valid = require_field(doc, "valid").get<bool>();
    result.raw_metric = parse_number_or_inf_tag(require_field(doc, "raw_metric"), "raw_metric");
    result.score = require_field(doc, "score").get<double>();
    if (auto it = doc.find("metrics"); it != doc.end())
        result.metrics = it->get<std::map<std::string, double>>();
    if (auto it = doc.find("reason"); it != doc.end())
        result.reason = it->get<std::string>();
    return result;
}

json candidate_to_json(const Candidate &cand) {
    json doc;
    doc["round"] = cand.round;
    doc["status"] = candidate_status_name(cand.status);
    doc["idea"] = cand.idea;
    doc["parent_round"] = cand.parent_round;
    if (cand.rm_score)
        doc["rm_score"] = *cand.rm_score;
    if (cand.payload)
        doc["payload"] = payload_to_json(*cand.payload);
    if (cand.result) {
        // Result fields are flattened into the record so a log line reads as
        // one measurement row.
        doc["valid"] = cand.result->valid;
        doc["raw_metric"] = number_or_inf_tag(cand.result->raw_metric);
        doc["score"] = cand.result->score;
        doc["metrics"] = cand.result->metrics;
        if (!cand.result->reason.empty())
            doc["reason"] = cand.result->reason;
    }
    return doc;
}

Candidate candidate_from_json(const json &doc, PayloadKind kind) {
    Candidate cand;
    cand.round = require_field(doc, "round").get<int>();
    const auto status = candidate_status_from_name(require_field(doc, "status").get<std::string>());
    if (!status)
        fail("unknown candidate status");
    cand.status = *status;
    cand.idea = require_field(doc, "idea").get<std::string>();
    cand.parent_round = require_field(doc, "parent_round").get<int>();
    if (auto it = doc.find("rm_score"); it != doc.end())
        cand.rm_score = it->get<double>();
    if (auto it = doc.find("payload"); it != doc.end())
        cand.payload = payload_from_json(kind, *it);
    if (auto it = doc.find("raw_metric"); it != doc.end()) {
        EvalResult result;
        result.valid = require_field(doc, "valid").get<bool>();
        result.raw_metric = parse_number_or_inf_tag(*it, "raw_metric");
        result.score = require_field(doc, "score").get<double>();
        if (auto m = doc.find("metrics"); m != doc.end())
            result.metrics = m->get<std::map<std::string, double>>();
        if (auto r = doc.find("reason"); r != doc.end())
            result.reason = r->get<std::string>();
        cand.result = std::move(result);
    }
    return cand;
}

nlohmann::json trajectory_summary(const Trajectory &trajectory) {
    const ProblemSpec &problem = trajectory.problem;
    int evaluated = 0, rejected = 0, failed = 0;
    for (const Candidate &cand : trajectory.steps) {
        switch (cand.status) {
        case CandidateStatus::Evaluated: ++evaluated; break;
        case CandidateStatus::RmRejected: ++rejected; break;
        case CandidateStatus::ExecFailed: ++failed; break;
        }
    }
    nlohmann::json doc{{"problem", problem.id},
                       {"candidates", trajectory.steps.size()},
                       {"rounds", trajectory.steps.empty()
                                      ? 0
                                      : static_cast<int>(trajectory.steps.size()) - 1},
                       {"evaluated", evaluated},
                       {"rm_rejected", rejected},
                       {"exec_failed", failed},
                       {"human_best", problem.human_best}};
    if (trajectory.best_index >= 0) {
        const Candidate &best = trajectory.steps[static_cast<std::size_t>(trajectory.best_index)];
        const double best_reported = reported_metric(problem, best.result->raw_metric);
        doc["best_round"] = best.round;
        doc["best_raw"] = best.result->raw_metric;
        doc["best_reported"] = best_reported;
        doc["best_score"] = best.result->score;
        doc["excel_at_best"] = excel_at_best(problem.direction, best_reported, problem.human_best);
    }
    return doc;
}

} // namespace extremal
