#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "extremal/loop/bindings.hpp"
#include "extremal/loop/executor.hpp"
#include "extremal/types.hpp"

namespace extremal {

// One discovery run: starting from a round-0 candidate, repeat max_rounds
// times -- sample a parent from the pool, generate an idea, optionally gate
// it through the reward model, produce a payload, evaluate it, and append the
// round's record. Every round appends exactly one candidate whatever its
// fate, so a finished trajectory always holds 1 + max_rounds entries and
// round k sits at index k.
struct LoopConfig {
    ProblemSpec problem;
    int max_rounds = 10;   // rounds appended after round 0
    std::uint64_t seed = 0;

    GeneratorBinding generator = GeneratorBinding::mutation();
    RewardModelBinding reward_model; // gate disabled by default
    PoolSampler sampler;

    // JSONL trajectory log, one candidate per line, flushed per round so an
    // interrupted run can be resumed. Empty = in-memory only. External LLM
    // exchanges are mirrored to "<log_path>.audit.jsonl".
    std::filesystem::path log_path;

    // External generator programs run under this executor.
    ExecutorConfig executor;
    int executor_timeout_ms = 10000;

    // Prompt template overrides; empty = the built-in defaults.
    std::string idea_prompt;
    std::string program_prompt;
    std::string rm_prompt;
};

// Round-0 record for a run that starts from nothing: exec_failed, no payload.
// The loop bootstraps by using it as parent until something evaluates.
Candidate make_null_start(std::string idea = "no initial construction");

// Round-0 record built from a concrete payload, evaluated on the spot.
Candidate make_evaluated_start(const ProblemSpec &problem, SolutionPayload payload,
                               std::string idea);

// Run the loop from scratch. `initial` must be round 0. Refuses to overwrite
// an existing non-empty log (resume or remove it instead). Deterministic
// given (cfg.seed, initial) for the scripted and mutation generators: every
// round derives its own RNG streams from the seed and round number.
Trajectory run_discovery(const LoopConfig &cfg, const Candidate &initial);

// Reload cfg.log_path and continue until max_rounds rounds exist. Because
// rounds are keyed by (seed, round), a resumed run appends byte-identical
// records to what the uninterrupted run would have written.
Trajectory resume_discovery(const LoopConfig &cfg);

// Best evaluated candidate, or nullptr while nothing has evaluated.
const Candidate *best_candidate(const Trajectory &trajectory);

} // namespace extremal
