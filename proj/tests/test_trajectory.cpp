#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "extremal/json_io.hpp"
#include "extremal/registry.hpp"
#include "extremal/trajectory.hpp"
#include "test_util.hpp"

using namespace extremal;

namespace {

Candidate evaluated(int round, double raw, double score, int parent = -1) {
    Candidate cand;
    cand.round = round;
    cand.idea = "candidate " + std::to_string(round);
    cand.parent_round = parent;
    cand.payload = IndicatorSet{{1, 0, 1}};
    EvalResult result;
    result.valid = true;
    result.raw_metric = raw;
    result.score = score;
    result.metrics = {{"size", 2.0}};
    cand.result = result;
    cand.status = CandidateStatus::Evaluated;
    return cand;
}

Candidate failed(int round) {
    Candidate cand;
    cand.round = round;
    cand.idea = "bad idea";
    cand.status = CandidateStatus::ExecFailed;
    return cand;
}

} // namespace

TEST_SUITE("trajectory") {

TEST_CASE("best advances only on strict improvement") {
    Trajectory traj;
    CHECK(std::isinf(best_score(traj)));
    CHECK(best_score(traj) < 0.0);
    CHECK_FALSE(has_evaluated(traj));

    update_best(traj, evaluated(0, 1.0, 1.0));
    CHECK(traj.best_index == 0);
    CHECK(has_evaluated(traj));

    update_best(traj, failed(1));
    CHECK(traj.best_index == 0);

    // A tie keeps the earlier candidate.
    update_best(traj, evaluated(2, 1.0, 1.0, 0));
    CHECK(traj.best_index == 0);

    update_best(traj, evaluated(3, 2.0, 2.0, 0));
    CHECK(traj.best_index == 3);
    CHECK(best_score(traj) == doctest::Approx(2.0));

    // A later worse candidate does not displace the best.
    update_best(traj, evaluated(4, 1.5, 1.5, 3));
    CHECK(traj.best_index == 3);
}

TEST_CASE("rounds must arrive in sequence") {
    Trajectory traj;
    update_best(traj, evaluated(0, 1.0, 1.0));
    CHECK_THROWS_AS(update_best(traj, evaluated(2, 1.0, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(update_best(traj, evaluated(0, 1.0, 1.0)), std::invalid_argument);
}

TEST_CASE("an evaluated candidate needs payload and result") {
    Trajectory traj;
    Candidate cand = evaluated(0, 1.0, 1.0);
    cand.payload.reset();
    CHECK_THROWS_AS(update_best(traj, cand), std::invalid_argument);
    cand = evaluated(0, 1.0, 1.0);
    cand.result.reset();
    CHECK_THROWS_AS(update_best(traj, cand), std::invalid_argument);
}

TEST_CASE("candidate records round-trip byte-identically") {
    Candidate cand = evaluated(3, 1.04, 1.04, 1);
    cand.rm_score = 7.25;
    const std::string line = candidate_to_json(cand).dump();
    const Candidate back = parse_candidate_line(line, PayloadKind::IndicatorSet);
    CHECK(candidate_to_json(back).dump() == line);
    CHECK(back.round == 3);
    CHECK(back.parent_round == 1);
    CHECK(back.rm_score.has_value());
    CHECK(*back.rm_score == doctest::Approx(7.25));
    CHECK(back.status == CandidateStatus::Evaluated);
    REQUIRE(back.result.has_value());
    CHECK(back.result->raw_metric == doctest::Approx(1.04));
    CHECK(back.result->metrics.at("size") == doctest::Approx(2.0));
}

TEST_CASE("statuses and optional fields survive the round trip") {
    Candidate rejected;
    rejected.round = 2;
    rejected.idea = "weak idea";
    rejected.parent_round = 0;
    rejected.rm_score = 3.5;
    rejected.status = CandidateStatus::RmRejected;
    const std::string line = candidate_to_json(rejected).dump();
    const Candidate back = parse_candidate_line(line, PayloadKind::IndicatorSet);
    CHECK(back.status == CandidateStatus::RmRejected);
    CHECK_FALSE(back.payload.has_value());
    CHECK_FALSE(back.result.has_value());
    CHECK(candidate_to_json(back).dump() == line);

    const std::string failed_line = candidate_to_json(failed(5)).dump();
    const Candidate failed_back = parse_candidate_line(failed_line, PayloadKind::IndicatorSet);
    CHECK(failed_back.status == CandidateStatus::ExecFailed);
    CHECK(candidate_to_json(failed_back).dump() == failed_line);
}

TEST_CASE("non-finite raw metrics cross the wire as inf tags") {
    Candidate cand;
    cand.round = 0;
    cand.idea = "invalid construction";
    cand.payload = IndicatorSet{{1}};
    EvalResult result;
    result.valid = false;
    result.raw_metric = std::numeric_limits<double>::infinity();
    result.score = -1.0;
    result.reason = "count";
    cand.result = result;
    cand.status = CandidateStatus::Evaluated;

    const nlohmann::json doc = candidate_to_json(cand);
    CHECK(doc.at("raw_metric") == "inf");
    const Candidate back = parse_candidate_line(doc.dump(), PayloadKind::IndicatorSet);
    REQUIRE(back.result.has_value());
    CHECK(std::isinf(back.result->raw_metric));
    CHECK(back.result->raw_metric > 0.0);
    CHECK(back.result->reason == "count");

    EvalResult negative = result;
    negative.raw_metric = -std::numeric_limits<double>::infinity();
    CHECK(result_to_json(negative).at("raw_metric") == "-inf");
}

TEST_CASE("a log file replays into the same trajectory") {
    const ProblemSpec problem = find_problem("mstd-30").value();
    const auto path = test_util::unique_temp_path("trajectory-log");

    Trajectory traj;
    traj.problem = problem;
    {
        std::ofstream out(path);
        for (const Candidate &cand :
             {evaluated(0, 1.0, 1.0), failed(1), evaluated(2, 1.04, 1.04, 0)}) {
            update_best(traj, cand);
            append_candidate_line(out, cand);
        }
    }

    const Trajectory back = read_trajectory_log(path, problem);
    REQUIRE(back.steps.size() == 3);
    CHECK(back.best_index == 2);
    for (std::size_t i = 0; i < back.steps.size(); ++i)
        CHECK(candidate_to_json(back.steps[i]).dump() ==
              candidate_to_json(traj.steps[i]).dump());
    std::filesystem::remove(path);
}

TEST_CASE("a log with a broken round sequence is rejected") {
    const ProblemSpec problem = find_problem("mstd-30").value();
    const auto path = test_util::unique_temp_path("broken-log");
    {
        std::ofstream out(path);
        append_candidate_line(out, evaluated(0, 1.0, 1.0));
        append_candidate_line(out, evaluated(2, 1.5, 1.5)); // skips round 1
    }
    CHECK_THROWS_AS(read_trajectory_log(path, problem), std::runtime_error);
    std::filesystem::remove(path);
}

TEST_CASE("missing log files are an error") {
    const ProblemSpec problem = find_problem("mstd-30").value();
    CHECK_THROWS_AS(read_trajectory_log(test_util::unique_temp_path("absent"), problem),
                    std::runtime_error);
}

} // TEST_SUITE
