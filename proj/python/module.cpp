// Python bindings. Payloads and results cross the boundary as plain dicts
// (via their JSON wire format), so Python callers never see the C++ types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "extremal/evaluate.hpp"
#include "extremal/json_io.hpp"
#include "extremal/known_assets.hpp"
#include "extremal/loop/discovery.hpp"
#include "extremal/registry.hpp"
#include "extremal/scoring.hpp"
#include "extremal/solvers/baseline.hpp"

namespace py = pybind11;

namespace {

using namespace extremal;

nlohmann::json to_json(const py::object &obj) {
    const std::string text =
        py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return nlohmann::json::parse(text);
}

py::object from_json(const nlohmann::json &doc) {
    return py::module_::import("json").attr("loads")(py::str(doc.dump()));
}

ProblemSpec spec_or_throw(const std::string &id) {
    if (std::optional<ProblemSpec> spec = find_problem(id))
        return *spec;
    throw std::invalid_argument("unknown problem \"" + id + "\"");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Evaluators, baseline constructions, and the discovery loop for "
              "eight extremal-combinatorics benchmark problems";

    m.def("problem_ids", &problem_ids, "Registered problem ids, in reporting order.");

    m.def(
        "problem",
        [](const std::string &id) {
            const ProblemSpec spec = spec_or_throw(id);
            py::dict doc;
            doc["id"] = spec.id;
            doc["direction"] = spec.direction == Direction::HigherBetter ? "higher_better"
                                                                         : "lower_better";
            doc["payload_kind"] = payload_kind_name(spec.payload_kind);
            doc["params"] = spec.params;
            doc["human_best"] = spec.human_best;
            doc["table_metric"] = spec.table_metric;
            return doc;
        },
        py::arg("id"), "Problem metadata as a dict.");

    m.def(
        "evaluate",
        [](const std::string &problem, const py::object &payload) {
            const ProblemSpec spec = spec_or_throw(problem);
            const SolutionPayload parsed = payload_from_json(spec.payload_kind, to_json(payload));
            return from_json(result_to_json(evaluate_payload(spec, parsed)));
        },
        py::arg("problem"), py::arg("payload"),
        "Score a payload dict; returns {valid, raw_metric, score, metrics, ...}.");

    m.def(
        "solve",
        [](const std::string &problem, std::uint64_t seed) {
            const ProblemSpec spec = spec_or_throw(problem);
            return from_json(payload_to_json(baseline_payload(spec, seed)));
        },
        py::arg("problem"), py::arg("seed") = 0,
        "Run the problem's baseline construction; returns a payload dict.");

    m.def(
        "excel_at_best",
        [](const std::string &problem, double raw_metric) {
            const ProblemSpec spec = spec_or_throw(problem);
            return excel_at_best(spec.direction, reported_metric(spec, raw_metric),
                                 spec.human_best);
        },
        py::arg("problem"), py::arg("raw_metric"),
        "Signed relative excellence of a raw metric against the human baseline "
        "(handles reporting units).");

    m.def(
        "discover",
        [](const std::string &problem, int rounds, std::uint64_t seed, double jitter,
           const std::string &rm, double threshold, const std::string &log_path) {
            const ProblemSpec spec = spec_or_throw(problem);
            LoopConfig cfg;
            cfg.problem = spec;
            cfg.max_rounds = rounds;
            cfg.seed = seed;
            cfg.generator = GeneratorBinding::mutation(jitter);
            if (rm == "stub")
                cfg.reward_model = RewardModelBinding::stub(threshold);
            else if (rm != "disabled")
                throw std::invalid_argument("rm must be \"disabled\" or \"stub\"");
            cfg.log_path = log_path;
            const Candidate initial =
                make_evaluated_start(spec, baseline_payload(spec, seed), "baseline construction");
            const Trajectory trajectory = run_discovery(cfg, initial);
            return from_json(trajectory_summary(trajectory));
        },
        py::arg("problem"), py::arg("rounds") = 10, py::arg("seed") = 0,
        py::arg("jitter") = 0.0, py::arg("rm") = "disabled", py::arg("threshold") = 5.5,
        py::arg("log_path") = "",
        "Run the mutation-generator discovery loop from the baseline start; "
        "returns the run summary dict.");

    m.def(
        "verify_known",
        [](const std::string &data_dir) {
            const VerificationSummary summary = verify_known_assets(data_dir);
            py::list reports;
            for (const KnownAssetReport &report : summary.reports) {
                py::dict doc;
                doc["name"] = report.name;
                doc["passed"] = report.passed;
                doc["detail"] = report.detail;
                reports.append(std::move(doc));
            }
            py::dict doc;
            doc["all_passed"] = summary.all_passed();
            doc["reports"] = std::move(reports);
            return doc;
        },
        py::arg("data_dir"),
        "Re-check the shipped data set against its manifest.");
}
