#include <doctest.h>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "extremal/json_io.hpp"
#include "extremal/loop/bindings.hpp"
#include "extremal/loop/discovery.hpp"
#include "extremal/loop/executor.hpp"
#include "extremal/loop/llm_client.hpp"
#include "extremal/loop/prompts.hpp"
#include "extremal/registry.hpp"
#include "extremal/solvers/constructions.hpp"
#include "extremal/trajectory.hpp"
#include "test_util.hpp"

using namespace extremal;

namespace {

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t line_count(const std::string &text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n')
            ++lines;
    return lines;
}

// Scripted step: re-derive the classical sum-dominant set and toggle one
// seed-chosen indicator.
ScriptedStep toggle_step(std::string idea) {
    return {std::move(idea), [](std::uint64_t round_seed) -> SolutionPayload {
                IndicatorSet set = conway_mstd_baseline(30);
                Rng rng(round_seed);
                set.indicators[rng.below(set.indicators.size())] ^= 1;
                return set;
            }};
}

ScriptedStep throwing_step(std::string idea) {
    return {std::move(idea), [](std::uint64_t) -> SolutionPayload {
                throw std::runtime_error("producer declined");
            }};
}

// Find the ordinal-th idea string whose stub review lands on the requested
// side of the gate, so gate tests do not bake in hash values.
std::string idea_with_stub_score(bool above, double threshold, int ordinal = 0) {
    int seen = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::string idea = "candidate idea #" + std::to_string(i);
        const double score = rm_stub_score(idea);
        if ((above ? score > threshold : score <= threshold) && seen++ == ordinal)
            return idea;
    }
    FAIL("no idea found on the requested side of the gate");
    return {};
}

LoopConfig scripted_config(const std::filesystem::path &log_path) {
    LoopConfig cfg;
    cfg.problem = find_problem("mstd-30").value();
    cfg.max_rounds = 6;
    cfg.seed = 99;
    cfg.generator = GeneratorBinding::scripted({
        toggle_step(idea_with_stub_score(true, 5.5, 0)),
        toggle_step(idea_with_stub_score(false, 5.5, 0)),
        throwing_step(idea_with_stub_score(true, 5.5, 1)),
    });
    cfg.reward_model = RewardModelBinding::stub(5.5);
    cfg.log_path = log_path;
    return cfg;
}

Candidate conway_start(const ProblemSpec &problem) {
    return make_evaluated_start(problem, conway_mstd_baseline(30), "classical baseline set");
}

// Local chat-completion mock. Routes on a marker at the start of the prompt
// so one server can play generator, reviewer, and programmer.
class MockLlm {
  public:
    MockLlm() {
        server_.Post("/v1/chat/completions", [this](const httplib::Request &req,
                                                    httplib::Response &res) {
            ++hits_;
            const auto body = nlohmann::json::parse(req.body);
            const std::string prompt = body.at("messages").at(0).at("content").get<std::string>();
            if (prompt.rfind("SLOW", 0) == 0)
                std::this_thread::sleep_for(std::chrono::milliseconds(2500));
            nlohmann::json reply;
            reply["choices"] = nlohmann::json::array();
            reply["choices"].push_back(
                {{"message", {{"role", "assistant"}, {"content", reply_for(prompt)}}}});
            res.set_content(reply.dump(), "application/json");
        });
        server_.Post("/broken", [](const httplib::Request &, httplib::Response &res) {
            res.status = 500;
            res.set_content("upstream exploded", "text/plain");
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        REQUIRE(port_ > 0);
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }

    ~MockLlm() {
        server_.stop();
        thread_.join();
    }

    ExternalEndpoint endpoint() const {
        ExternalEndpoint ep;
        ep.base_url = "http://127.0.0.1:" + std::to_string(port_);
        ep.model = "mock";
        ep.api_key = "test-key";
        return ep;
    }

    int hits() const { return hits_.load(); }

  private:
    static std::string reply_for(const std::string &prompt) {
        if (prompt.rfind("IDEA", 0) == 0)
            return "Toggle one element of the classical set.";
        if (prompt.rfind("SCORE", 0) == 0)
            return "Sound plan, minor risk of regression.\n\\boxed{9.25}";
        if (prompt.rfind("NOSCORE", 0) == 0)
            return "I would rate this somewhere around seven.";
        if (prompt.rfind("PROGRAM", 0) == 0) {
            // The reply is executed as-is, so it must be a runnable program.
            const auto payload = payload_to_json(conway_mstd_baseline(30)).dump();
            return "# emit the classical sum-dominant set\nprint('" + payload + "')";
        }
        return "unrecognized request";
    }

    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    std::atomic<int> hits_{0};
};

} // namespace

TEST_SUITE("loop") {

TEST_CASE("templates substitute every placeholder occurrence") {
    const std::string text = "try {idea} on {target}; repeat {idea}; keep {unknown}";
    const std::string rendered =
        render_template(text, {{"idea", "toggling"}, {"target", "the set"}});
    CHECK(rendered == "try toggling on the set; repeat toggling; keep {unknown}");
    CHECK(render_template("no placeholders", {{"idea", "x"}}) == "no placeholders");
}

TEST_CASE("built-in prompts expose their documented placeholders") {
    CHECK(default_idea_prompt().find("{proposal}") != std::string::npos);
    CHECK(default_idea_prompt().find("{results}") != std::string::npos);
    CHECK(default_program_prompt().find("{proposal}") != std::string::npos);
    CHECK(default_rm_prompt().find("{proposal}") != std::string::npos);
    CHECK(default_rm_prompt().find("\\boxed{") != std::string::npos);
}

TEST_CASE("boxed scores parse from the last box") {
    CHECK(parse_boxed_score("verdict: \\boxed{7.5}") == doctest::Approx(7.5));
    CHECK(parse_boxed_score("first \\boxed{2} then \\boxed{ 8.25 }") == doctest::Approx(8.25));
    CHECK(parse_boxed_score("negative \\boxed{-3.5}") == doctest::Approx(-3.5));
    CHECK_FALSE(parse_boxed_score("no box at all").has_value());
    CHECK_FALSE(parse_boxed_score("\\boxed{not a number}").has_value());
    CHECK_FALSE(parse_boxed_score("\\boxed{7.5 apples}").has_value());
    CHECK_FALSE(parse_boxed_score("\\boxed{").has_value());
    // A trailing non-numeric box does not erase an earlier numeric one.
    CHECK(parse_boxed_score("\\boxed{4} and \\boxed{??}") == doctest::Approx(4.0));
}

TEST_CASE("stub reviews are deterministic and stay in range") {
    const double a = rm_stub_score("densify the corners");
    CHECK(a == rm_stub_score("densify the corners"));
    for (int i = 0; i < 200; ++i) {
        const double s = rm_stub_score("idea " + std::to_string(i));
        CHECK(s >= 1.0);
        CHECK(s < 10.0);
    }
    CHECK(rm_stub_score("alpha") != rm_stub_score("beta"));
}

TEST_CASE("parent sampling draws only from evaluated candidates") {
    const ProblemSpec problem = find_problem("mstd-30").value();
    Trajectory traj;
    traj.problem = problem;
    update_best(traj, conway_start(problem));                      // round 0: evaluated
    Candidate failed;
    failed.round = 1;
    failed.idea = "broken";
    failed.status = CandidateStatus::ExecFailed;
    update_best(traj, failed);                                     // round 1: failed
    Candidate worse = conway_start(problem);
    worse.round = 2;
    worse.result->score -= 0.5;                                    // round 2: evaluated, worse
    worse.result->raw_metric -= 0.5;
    update_best(traj, worse);

    Rng rng(5);
    PoolSampler uniform;
    bool saw_round0 = false;
    bool saw_round2 = false;
    for (int i = 0; i < 60; ++i) {
        const Candidate &parent = sample_parent(traj, uniform, rng);
        CHECK((parent.round == 0 || parent.round == 2));
        saw_round0 = saw_round0 || parent.round == 0;
        saw_round2 = saw_round2 || parent.round == 2;
    }
    CHECK(saw_round0);
    CHECK(saw_round2);

    PoolSampler best;
    best.policy = PoolSampler::Policy::BestOnly;
    CHECK(sample_parent(traj, best, rng).round == 0);

    PoolSampler softmax;
    softmax.policy = PoolSampler::Policy::ScoreSoftmax;
    softmax.temperature = 1e-9; // effectively argmax
    for (int i = 0; i < 20; ++i)
        CHECK(sample_parent(traj, softmax, rng).round == 0);
    softmax.temperature = 1e9; // effectively uniform
    bool hot_saw_worse = false;
    for (int i = 0; i < 200 && !hot_saw_worse; ++i)
        hot_saw_worse = sample_parent(traj, softmax, rng).round == 2;
    CHECK(hot_saw_worse);

    softmax.temperature = 0.0;
    CHECK_THROWS_AS(sample_parent(traj, softmax, rng), std::invalid_argument);

    Trajectory cold;
    cold.problem = problem;
    Candidate null_start = make_null_start();
    update_best(cold, null_start);
    CHECK_THROWS_AS(sample_parent(cold, uniform, rng), std::runtime_error);
}

TEST_CASE("programs run isolated with captured pipes, exit codes, and timeouts") {
    ExecutorConfig config;
    config.workdir = test_util::unique_temp_path("executor");

    const ExecOutcome ok = run_program(config, "print('hello from the sandbox')", "ok.py",
                                       std::chrono::milliseconds(5000));
    CHECK(ok.exit_code == 0);
    CHECK_FALSE(ok.timed_out);
    CHECK(ok.output.find("hello from the sandbox") != std::string::npos);
    CHECK(std::filesystem::exists(config.workdir / "ok.py"));

    const ExecOutcome failing = run_program(
        config, "import sys\nsys.stderr.write('bad input\\n')\nsys.exit(3)", "fail.py",
        std::chrono::milliseconds(5000));
    CHECK(failing.exit_code == 3);
    CHECK(failing.error.find("bad input") != std::string::npos);

    const auto start = std::chrono::steady_clock::now();
    const ExecOutcome slow = run_program(config, "import time\ntime.sleep(10)", "slow.py",
                                         std::chrono::milliseconds(300));
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(slow.timed_out);
    CHECK(elapsed < std::chrono::seconds(5));

    std::filesystem::remove_all(config.workdir);
}

TEST_CASE("scripted runs are deterministic, complete, and sound at the gate") {
    const auto log_a = test_util::unique_temp_path("loop-a");
    const auto log_b = test_util::unique_temp_path("loop-b");
    LoopConfig cfg = scripted_config(log_a);
    const Candidate start = conway_start(cfg.problem);

    const Trajectory run_one = run_discovery(cfg, start);
    cfg.log_path = log_b;
    const Trajectory run_two = run_discovery(cfg, start);

    // Byte-identical logs (replay determinism).
    const std::string bytes_a = read_file(log_a);
    CHECK(bytes_a == read_file(log_b));
    CHECK(line_count(bytes_a) == 7); // round 0 plus exactly max_rounds appends

    // Exact round count and indexing.
    REQUIRE(run_one.steps.size() == 7);
    for (int k = 0; k < 7; ++k)
        CHECK(run_one.steps[static_cast<std::size_t>(k)].round == k);

    // Gate soundness: rejected rounds carry a sub-threshold review and no
    // payload; evaluated rounds passed the gate.
    bool saw_rejection = false;
    bool saw_exec_failure = false;
    for (std::size_t k = 1; k < run_one.steps.size(); ++k) {
        const Candidate &cand = run_one.steps[k];
        if (cand.status == CandidateStatus::RmRejected) {
            saw_rejection = true;
            REQUIRE(cand.rm_score.has_value());
            CHECK(*cand.rm_score <= cfg.reward_model.threshold);
            CHECK_FALSE(cand.payload.has_value());
            CHECK_FALSE(cand.result.has_value());
        } else {
            REQUIRE(cand.rm_score.has_value());
            CHECK(*cand.rm_score > cfg.reward_model.threshold);
        }
        if (cand.status == CandidateStatus::ExecFailed)
            saw_exec_failure = true;
        if (cand.status == CandidateStatus::Evaluated) {
            REQUIRE(cand.payload.has_value());
            REQUIRE(cand.result.has_value());
        }
        CHECK(cand.parent_round >= 0);
        CHECK(cand.parent_round < cand.round);
        // Parents are always drawn from evaluated candidates once any exist.
        CHECK(run_one.steps[static_cast<std::size_t>(cand.parent_round)].status ==
              CandidateStatus::Evaluated);
    }
    CHECK(saw_rejection);     // the script includes a sub-threshold idea
    CHECK(saw_exec_failure);  // and a throwing producer

    // Monotone best: walking the steps never sees the running best decline.
    double running = -std::numeric_limits<double>::infinity();
    for (const Candidate &cand : run_one.steps)
        if (cand.status == CandidateStatus::Evaluated)
            running = std::max(running, cand.result->score);
    REQUIRE(run_one.best_index >= 0);
    CHECK(best_score(run_one) == doctest::Approx(running));

    // A second start over the same non-empty log is refused.
    CHECK_THROWS_AS(run_discovery(cfg, start), std::runtime_error);

    std::filesystem::remove(log_a);
    std::filesystem::remove(log_b);
}

TEST_CASE("resuming an interrupted run reproduces the uninterrupted bytes") {
    const auto log_full = test_util::unique_temp_path("loop-full");
    const auto log_split = test_util::unique_temp_path("loop-split");

    LoopConfig cfg = scripted_config(log_full);
    const Candidate start = conway_start(cfg.problem);
    run_discovery(cfg, start);

    cfg.log_path = log_split;
    cfg.max_rounds = 2; // simulate an interruption after round 2
    run_discovery(cfg, start);
    cfg.max_rounds = 6;
    const Trajectory resumed = resume_discovery(cfg);

    CHECK(read_file(log_full) == read_file(log_split));
    CHECK(resumed.steps.size() == 7);

    // Resuming a complete log is a no-op returning the stored trajectory.
    const std::string before = read_file(log_split);
    const Trajectory again = resume_discovery(cfg);
    CHECK(again.steps.size() == 7);
    CHECK(read_file(log_split) == before);

    std::filesystem::remove(log_full);
    std::filesystem::remove(log_split);
}

TEST_CASE("a run can start from nothing and recover") {
    LoopConfig cfg;
    cfg.problem = find_problem("mstd-30").value();
    cfg.max_rounds = 3;
    cfg.seed = 4;
    cfg.generator = GeneratorBinding::scripted({toggle_step("start from scratch")});

    const Trajectory traj = run_discovery(cfg, make_null_start());
    REQUIRE(traj.steps.size() == 4);
    CHECK(traj.steps[0].status == CandidateStatus::ExecFailed);
    CHECK(traj.steps[1].parent_round == 0); // bootstrap parent is the null start
    CHECK(best_candidate(traj) != nullptr);
    CHECK(traj.best_index >= 1);

    Candidate not_round_zero = make_null_start();
    not_round_zero.round = 2;
    CHECK_THROWS_AS(run_discovery(cfg, not_round_zero), std::invalid_argument);
}

TEST_CASE("loop configs are validated") {
    LoopConfig cfg;
    cfg.problem = find_problem("mstd-30").value();
    cfg.max_rounds = 0;
    CHECK_THROWS_AS(run_discovery(cfg, make_null_start()), std::invalid_argument);
    cfg.max_rounds = 2;
    CHECK_THROWS_AS(GeneratorBinding::scripted({}), std::invalid_argument);
    cfg.generator.kind = GeneratorBinding::Kind::Scripted; // bypassing the factory
    cfg.generator.script.clear();
    CHECK_THROWS_AS(run_discovery(cfg, make_null_start()), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorBinding::mutation(1.5), std::invalid_argument);
    cfg.generator = GeneratorBinding::mutation();
    cfg.log_path.clear();
    CHECK_THROWS_AS(resume_discovery(cfg), std::invalid_argument); // nothing to resume
}

TEST_CASE("chat completions round-trip against a local endpoint") {
    MockLlm mock;

    LlmExchange exchange;
    const std::string reply = chat_complete(mock.endpoint(), "IDEA what next?", &exchange);
    CHECK(reply == "Toggle one element of the classical set.");
    CHECK(exchange.http_status == 200);
    const auto request = nlohmann::json::parse(exchange.request_body);
    CHECK(request.at("model") == "mock");
    CHECK(request.at("messages").at(0).at("role") == "user");
    CHECK(request.at("messages").at(0).at("content") == "IDEA what next?");
    const auto response = nlohmann::json::parse(exchange.response_body);
    CHECK(response.at("choices").at(0).at("message").at("content") == reply);

    const std::string scored = chat_complete(mock.endpoint(), "SCORE this plan");
    CHECK(parse_boxed_score(scored) == doctest::Approx(9.25));
    CHECK_FALSE(parse_boxed_score(chat_complete(mock.endpoint(), "NOSCORE rate it")).has_value());

    ExternalEndpoint broken = mock.endpoint();
    broken.path = "/broken";
    LlmExchange failed;
    CHECK_THROWS_AS(chat_complete(broken, "IDEA", &failed), std::runtime_error);
    CHECK(failed.http_status == 500);

    ExternalEndpoint missing = mock.endpoint();
    missing.path = "/absent";
    CHECK_THROWS_AS(chat_complete(missing, "IDEA"), std::runtime_error);

    ExternalEndpoint tls;
    tls.base_url = "https://127.0.0.1:1";
    tls.model = "mock";
    CHECK_THROWS_AS(chat_complete(tls, "IDEA"), std::runtime_error);
}

TEST_CASE("slow endpoints trip the client timeout") {
    MockLlm mock;
    ExternalEndpoint slow = mock.endpoint();
    slow.timeout_ms = 1000; // handler sleeps 2.5 s
    LlmExchange exchange;
    CHECK_THROWS_AS(chat_complete(slow, "SLOW IDEA", &exchange), std::runtime_error);
    CHECK(exchange.http_status == 0); // no response ever arrived
}

TEST_CASE("an external generator and reviewer drive a full run") {
    MockLlm mock;

    LoopConfig cfg;
    cfg.problem = find_problem("mstd-30").value();
    cfg.max_rounds = 2;
    cfg.seed = 17;
    cfg.generator = GeneratorBinding::external(mock.endpoint());
    cfg.reward_model = RewardModelBinding::external(mock.endpoint(), 5.5);
    cfg.idea_prompt = "IDEA parent={proposal}";
    cfg.program_prompt = "PROGRAM idea={proposal}";
    cfg.rm_prompt = "SCORE idea={proposal}";
    cfg.log_path = test_util::unique_temp_path("loop-external");
    cfg.executor.workdir = test_util::unique_temp_path("loop-external-work");

    const Trajectory traj = run_discovery(cfg, conway_start(cfg.problem));
    REQUIRE(traj.steps.size() == 3);
    for (std::size_t k = 1; k < traj.steps.size(); ++k) {
        const Candidate &cand = traj.steps[k];
        CHECK(cand.status == CandidateStatus::Evaluated);
        CHECK(cand.idea == "Toggle one element of the classical set.");
        REQUIRE(cand.rm_score.has_value());
        CHECK(*cand.rm_score == doctest::Approx(9.25));
        REQUIRE(cand.result.has_value());
        CHECK(cand.result->raw_metric == doctest::Approx(1.04));
    }
    CHECK(mock.hits() == 6); // idea + review + program, twice

    // The audit sidecar mirrors every exchange with its role.
    const auto audit_path = cfg.log_path.string() + ".audit.jsonl";
    REQUIRE(std::filesystem::exists(audit_path));
    std::ifstream audit(audit_path);
    std::string line;
    std::vector<std::string> roles;
    while (std::getline(audit, line)) {
        const auto doc = nlohmann::json::parse(line);
        roles.push_back(doc.at("role").get<std::string>());
        CHECK(doc.at("status") == 200);
        CHECK(nlohmann::json::parse(doc.at("request").get<std::string>()).contains("messages"));
        CHECK(doc.at("round").is_number_integer());
    }
    CHECK(roles == std::vector<std::string>({"idea", "rm", "program", "idea", "rm", "program"}));

    std::filesystem::remove(cfg.log_path);
    std::filesystem::remove(audit_path);
    std::filesystem::remove_all(cfg.executor.workdir);
}

TEST_CASE("a reviewer that never boxes a score fails the round, not the run") {
    MockLlm mock;

    LoopConfig cfg;
    cfg.problem = find_problem("mstd-30").value();
    cfg.max_rounds = 2;
    cfg.seed = 23;
    cfg.generator = GeneratorBinding::scripted({toggle_step("keep the set intact")});
    cfg.reward_model = RewardModelBinding::external(mock.endpoint(), 5.5);
    cfg.rm_prompt = "NOSCORE idea={proposal}";

    const Trajectory traj = run_discovery(cfg, conway_start(cfg.problem));
    REQUIRE(traj.steps.size() == 3);
    for (std::size_t k = 1; k < traj.steps.size(); ++k) {
        CHECK(traj.steps[k].status == CandidateStatus::ExecFailed);
        CHECK_FALSE(traj.steps[k].rm_score.has_value());
    }
    CHECK(traj.best_index == 0); // the starting construction remains best
}

} // TEST_SUITE
