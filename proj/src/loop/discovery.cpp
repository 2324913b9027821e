#include "extremal/loop/discovery.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "extremal/evaluate.hpp"
#include "extremal/json_io.hpp"
#include "extremal/loop/llm_client.hpp"
#include "extremal/loop/prompts.hpp"
#include "extremal/trajectory.hpp"

namespace extremal {

namespace {

// Sidecar JSONL for raw LLM exchanges. Opened lazily so runs without an
// external endpoint never create the file.
class AuditLog {
  public:
    AuditLog(std::filesystem::path path, std::ios::openmode mode)
        : path_(std::move(path)), mode_(mode) {}

    void append(int round, const std::string &role, const LlmExchange &exchange) {
        if (path_.empty())
            return;
        if (!stream_.is_open()) {
            stream_.open(path_, mode_);
            if (!stream_)
                throw std::runtime_error("cannot open audit log for writing: " + path_.string());
        }
        const nlohmann::json record{{"round", round},
                                    {"role", role},
                                    {"request", exchange.request_body},
                                    {"response", exchange.response_body},
                                    {"status", exchange.http_status}};
        stream_ << record.dump() << '\n';
        stream_.flush();
    }

  private:
    std::filesystem::path path_;
    std::ios::openmode mode_;
    std::ofstream stream_;
};

std::string payload_text(const Candidate &cand) {
    return cand.payload ? payload_to_json(*cand.payload).dump() : "(none)";
}

std::string result_text(const Candidate &cand) {
    return cand.result ? result_to_json(*cand.result).dump() : "(none)";
}

const std::string &pick(const std::string &override_text, const std::string &fallback) {
    return override_text.empty() ? fallback : override_text;
}

// chat_complete wrapper that records the exchange even when the call throws.
std::string chat_with_audit(const ExternalEndpoint &endpoint, const std::string &prompt,
                            int round, const std::string &role, AuditLog &audit) {
    LlmExchange exchange;
    try {
        std::string reply = chat_complete(endpoint, prompt, &exchange);
        audit.append(round, role, exchange);
        return reply;
    } catch (...) {
        audit.append(round, role, exchange);
        throw;
    }
}

std::string make_idea(const LoopConfig &cfg, const Candidate &parent, int round,
                      AuditLog &audit) {
    switch (cfg.generator.kind) {
    case GeneratorBinding::Kind::Scripted: {
        const auto &script = cfg.generator.script;
        return script[static_cast<std::size_t>(round - 1) % script.size()].idea;
    }
    case GeneratorBinding::Kind::Mutation:
        return "Re-run the baseline construction with a fresh seed (round " +
               std::to_string(round) + ").";
    case GeneratorBinding::Kind::External: {
        const std::string prompt =
            render_template(pick(cfg.idea_prompt, default_idea_prompt()),
                            {{"proposal", parent.idea},
                             {"program", payload_text(parent)},
                             {"results", result_text(parent)}});
        return chat_with_audit(cfg.generator.endpoint, prompt, round, "idea", audit);
    }
    }
    throw std::invalid_argument("make_idea: unknown generator kind");
}

double score_idea(const LoopConfig &cfg, const std::string &idea, int round, AuditLog &audit) {
    switch (cfg.reward_model.kind) {
    case RewardModelBinding::Kind::Stub:
        return rm_stub_score(idea);
    case RewardModelBinding::Kind::External: {
        const std::string prompt =
            render_template(pick(cfg.rm_prompt, default_rm_prompt()), {{"proposal", idea}});
        const std::string reply =
            chat_with_audit(cfg.reward_model.endpoint, prompt, round, "rm", audit);
        const std::optional<double> score = parse_boxed_score(reply);
        if (!score)
            throw std::runtime_error("reward model reply carries no boxed score");
        return *score;
    }
    case RewardModelBinding::Kind::Disabled:
        break;
    }
    throw std::invalid_argument("score_idea: reward model gate is disabled");
}

// Find the payload document in a program's stdout: the whole text first,
// then the last non-empty line (programs often print progress before the
// final JSON document).
SolutionPayload parse_program_output(const std::string &output, PayloadKind kind) {
    const auto try_parse = [kind](const std::string &text) -> std::optional<SolutionPayload> {
        nlohmann::json doc = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
        if (doc.is_discarded())
            return std::nullopt;
        return payload_from_json(kind, doc);
    };
    if (std::optional<SolutionPayload> whole = try_parse(output))
        return *whole;
    std::size_t end = output.find_last_not_of(" \t\r\n");
    if (end != std::string::npos) {
        const std::size_t start = output.find_last_of('\n', end);
        const std::string last_line =
            output.substr(start == std::string::npos ? 0 : start + 1,
                          end - (start == std::string::npos ? 0 : start + 1) + 1);
        if (std::optional<SolutionPayload> line = try_parse(last_line))
            return *line;
    }
    throw std::runtime_error("program output carries no payload document");
}

SolutionPayload make_payload(const LoopConfig &cfg, const Candidate &parent,
                             const std::string &idea, int round, Rng &rng, AuditLog &audit) {
    switch (cfg.generator.kind) {
    case GeneratorBinding::Kind::Scripted: {
        const auto &script = cfg.generator.script;
        const auto &step = script[static_cast<std::size_t>(round - 1) % script.size()];
        if (!step.produce)
            throw std::runtime_error("scripted step has no payload producer");
        return step.produce(rng.next_u64());
    }
    case GeneratorBinding::Kind::Mutation:
        return mutation_payload(cfg.problem, rng.next_u64(), cfg.generator.mutation_jitter);
    case GeneratorBinding::Kind::External: {
        const std::string prompt =
            render_template(pick(cfg.program_prompt, default_program_prompt()),
                            {{"previous_proposal", parent.idea},
                             {"previous_program", payload_text(parent)},
                             {"previous_result", result_text(parent)},
                             {"proposal", idea}});
        const std::string program =
            chat_with_audit(cfg.generator.endpoint, prompt, round, "program", audit);
        const ExecOutcome outcome =
            run_program(cfg.executor, program, "round_" + std::to_string(round) + ".py",
                        std::chrono::milliseconds(cfg.executor_timeout_ms));
        if (outcome.timed_out)
            throw std::runtime_error("program timed out");
        if (outcome.exit_code != 0)
            throw std::runtime_error("program exited with code " +
                                     std::to_string(outcome.exit_code));
        return parse_program_output(outcome.output, cfg.problem.payload_kind);
    }
    }
    throw std::invalid_argument("make_payload: unknown generator kind");
}

// One full round. Never throws for candidate-level failures -- those become
// rm_rejected / exec_failed records -- only for harness-level bugs.
Candidate run_round(const LoopConfig &cfg, const Trajectory &trajectory, int round,
                    AuditLog &audit) {
    Candidate cand;
    cand.round = round;

    // Stage streams keyed by (seed, round) so a resumed run replays each
    // round identically no matter when the process restarted.
    const std::uint64_t base = static_cast<std::uint64_t>(round) * 4;
    Rng sampler_rng = Rng::stream(cfg.seed, base + 0);

    const Candidate &parent = has_evaluated(trajectory)
                                  ? sample_parent(trajectory, cfg.sampler, sampler_rng)
                                  : trajectory.steps.front();
    cand.parent_round = parent.round;

    try {
        cand.idea = make_idea(cfg, parent, round, audit);
    } catch (const std::exception &) {
        cand.idea = "(idea generation failed)";
        cand.status = CandidateStatus::ExecFailed;
        return cand;
    }

    if (cfg.reward_model.kind != RewardModelBinding::Kind::Disabled) {
        double rm_score = 0.0;
        try {
            rm_score = score_idea(cfg, cand.idea, round, audit);
        } catch (const std::exception &) {
            cand.status = CandidateStatus::ExecFailed;
            return cand;
        }
        cand.rm_score = rm_score;
        if (!(rm_score > cfg.reward_model.threshold)) {
            cand.status = CandidateStatus::RmRejected;
            return cand;
        }
    }

    Rng payload_rng = Rng::stream(cfg.seed, base + 2);
    try {
        SolutionPayload payload = make_payload(cfg, parent, cand.idea, round, payload_rng, audit);
        cand.result = evaluate_payload(cfg.problem, payload);
        cand.payload = std::move(payload);
        cand.status = CandidateStatus::Evaluated;
    } catch (const std::exception &) {
        cand.payload.reset();
        cand.result.reset();
        cand.status = CandidateStatus::ExecFailed;
    }
    return cand;
}

void append_round(Trajectory &trajectory, Candidate cand, std::ofstream &log) {
    update_best(trajectory, std::move(cand));
    if (log.is_open()) {
        append_candidate_line(log, trajectory.steps.back());
        log.flush();
    }
}

std::filesystem::path audit_path_for(const std::filesystem::path &log_path) {
    if (log_path.empty())
        return {};
    return std::filesystem::path(log_path.string() + ".audit.jsonl");
}

void validate_config(const LoopConfig &cfg) {
    if (cfg.max_rounds < 1)
        throw std::invalid_argument("discovery: max_rounds must be >= 1");
    if (cfg.generator.kind == GeneratorBinding::Kind::Scripted && cfg.generator.script.empty())
        throw std::invalid_argument("discovery: scripted generator has an empty script");
}

Trajectory run_rounds(const LoopConfig &cfg, Trajectory trajectory, std::ofstream &log,
                      AuditLog &audit) {
    for (int round = static_cast<int>(trajectory.steps.size()); round <= cfg.max_rounds; ++round)
        append_round(trajectory, run_round(cfg, trajectory, round, audit), log);
    return trajectory;
}

} // namespace

Candidate make_null_start(std::string idea) {
    Candidate cand;
    cand.round = 0;
    cand.idea = std::move(idea);
    cand.status = CandidateStatus::ExecFailed;
    return cand;
}

Candidate make_evaluated_start(const ProblemSpec &problem, SolutionPayload payload,
                               std::string idea) {
    Candidate cand;
    cand.round = 0;
    cand.idea = std::move(idea);
    cand.result = evaluate_payload(problem, payload);
    cand.payload = std::move(payload);
    cand.status = CandidateStatus::Evaluated;
    return cand;
}

Trajectory run_discovery(const LoopConfig &cfg, const Candidate &initial) {
    validate_config(cfg);
    if (initial.round != 0)
        throw std::invalid_argument("discovery: the initial candidate must be round 0");

    std::ofstream log;
    if (!cfg.log_path.empty()) {
        std::error_code ec;
        if (std::filesystem::exists(cfg.log_path, ec) &&
            std::filesystem::file_size(cfg.log_path, ec) > 0)
            throw std::runtime_error("trajectory log already exists: " + cfg.log_path.string() +
                                     " (resume it or remove it)");
        if (cfg.log_path.has_parent_path())
            std::filesystem::create_directories(cfg.log_path.parent_path());
        log.open(cfg.log_path, std::ios::trunc);
        if (!log)
            throw std::runtime_error("cannot open trajectory log for writing: " +
                                     cfg.log_path.string());
        std::filesystem::remove(audit_path_for(cfg.log_path), ec); // drop stale sidecar
    }
    AuditLog audit(audit_path_for(cfg.log_path), std::ios::trunc);

    Trajectory trajectory;
    trajectory.problem = cfg.problem;
    append_round(trajectory, initial, log);
    return run_rounds(cfg, std::move(trajectory), log, audit);
}

Trajectory resume_discovery(const LoopConfig &cfg) {
    validate_config(cfg);
    if (cfg.log_path.empty())
        throw std::invalid_argument("discovery: resume needs a log path");

    Trajectory trajectory = read_trajectory_log(cfg.log_path, cfg.problem);
    if (trajectory.steps.empty())
        throw std::runtime_error("trajectory log is empty; start a fresh run instead: " +
                                 cfg.log_path.string());
    if (static_cast<int>(trajectory.steps.size()) > cfg.max_rounds)
        return trajectory; // already complete

    std::ofstream log(cfg.log_path, std::ios::app);
    if (!log)
        throw std::runtime_error("cannot open trajectory log for appending: " +
                                 cfg.log_path.string());
    AuditLog audit(audit_path_for(cfg.log_path), std::ios::app);
    return run_rounds(cfg, std::move(trajectory), log, audit);
}

const Candidate *best_candidate(const Trajectory &trajectory) {
    if (trajectory.best_index < 0)
        return nullptr;
    return &trajectory.steps[static_cast<std::size_t>(trajectory.best_index)];
}

} // namespace extremal
