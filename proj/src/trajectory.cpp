#include "extremal/trajectory.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "extremal/json_io.hpp"

namespace extremal {

void update_best(Trajectory &trajectory, Candidate cand) {
    const int expected = static_cast<int>(trajectory.steps.size());
    if (cand.round != expected)
        throw std::invalid_argument("update_best: expected round " + std::to_string(expected) +
                                    ", got " + std::to_string(cand.round));
    if (cand.status == CandidateStatus::Evaluated && (!cand.payload || !cand.result))
        throw std::invalid_argument("update_best: evaluated candidate lacks payload or result");

    trajectory.steps.push_back(std::move(cand));
    const Candidate &stored = trajectory.steps.back();
    if (stored.status != CandidateStatus::Evaluated)
        return;
    // Strict improvement only: a tie keeps the earlier best.
    if (trajectory.best_index < 0 || stored.result->score > best_score(trajectory))
        trajectory.best_index = static_cast<int>(trajectory.steps.size()) - 1;
}

double best_score(const Trajectory &trajectory) {
    if (trajectory.best_index < 0)
        return -std::numeric_limits<double>::infinity();
    return trajectory.steps[static_cast<std::size_t>(trajectory.best_index)].result->score;
}

bool has_evaluated(const Trajectory &trajectory) {
    for (const auto &step : trajectory.steps)
        if (step.status == CandidateStatus::Evaluated)
            return true;
    return false;
}

void append_candidate_line(std::ostream &out, const Candidate &cand) {
    out << candidate_to_json(cand).dump() << '\n';
}

Candidate parse_candidate_line(const std::string &line, PayloadKind kind) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error &err) {
        throw std::runtime_error(std::string("trajectory log: bad JSON line: ") + err.what());
    }
    return candidate_from_json(doc, kind);
}

Trajectory read_trajectory_log(const std::filesystem::path &path, const ProblemSpec &problem) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("trajectory log: cannot open " + path.string());

    Trajectory trajectory;
    trajectory.problem = problem;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        // update_best enforces the 0,1,2,... round sequence and rebuilds
        // best_index exactly as the original run computed it.
        try {
            update_best(trajectory, parse_candidate_line(line, problem.payload_kind));
        } catch (const std::invalid_argument &err) {
            throw std::runtime_error(std::string("trajectory log: ") + err.what());
        }
    }
    if (in.bad())
        throw std::runtime_error("trajectory log: read error on " + path.string());
    return trajectory;
}

} // namespace extremal
