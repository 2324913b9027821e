#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "extremal/rng.hpp"
#include "extremal/types.hpp"

namespace extremal {

// Connection details for an OpenAI-style chat-completion endpoint. Empty
// fields fall back to EXTREMAL_LLM_BASE_URL / EXTREMAL_LLM_API_KEY /
// EXTREMAL_LLM_MODEL at call time. Only http:// URLs are supported (point
// the client at a local gateway for TLS upstreams).
struct ExternalEndpoint {
    std::string base_url;
    std::string api_key;
    std::string model;
    std::string path = "/v1/chat/completions";
    int timeout_ms = 30000;
};

// One entry of a scripted generator: fixed idea text plus a pure payload
// producer keyed by a per-round seed. Throwing from `produce` marks the
// round exec_failed.
struct ScriptedStep {
    std::string idea;
    std::function<SolutionPayload(std::uint64_t round_seed)> produce;
};

struct GeneratorBinding {
    enum class Kind { Scripted, Mutation, External };

    Kind kind = Kind::Mutation;
    // Scripted: non-empty; round k uses step (k-1) mod size, so short scripts
    // cycle instead of capping the round count.
    std::vector<ScriptedStep> script;
    // Mutation: relative jitter applied to the baseline solver's main
    // intensity knob (0 = vary only the solver seed per round).
    double mutation_jitter = 0.0;
    ExternalEndpoint endpoint; // External

    static GeneratorBinding scripted(std::vector<ScriptedStep> steps);
    static GeneratorBinding mutation(double jitter = 0.0);
    static GeneratorBinding external(ExternalEndpoint endpoint);
};

// Re-run the problem's baseline construction with a per-round seed (and an
// optional parameter jitter): packing/SA/GA/greedy re-seeded for the
// geometric problems, sign flips on the Rudin-Shapiro sequence, an indicator
// toggle on the sum-dominant set, and multiplicative noise on the step
// density. Throws std::invalid_argument for an unregistered problem id.
SolutionPayload mutation_payload(const ProblemSpec &problem, std::uint64_t round_seed,
                                 double jitter);

struct RewardModelBinding {
    enum class Kind { Disabled, Stub, External };

    Kind kind = Kind::Disabled;
    // An idea passes the gate when score > threshold (scores at the threshold
    // are rejected).
    double threshold = 5.5;
    ExternalEndpoint endpoint; // External

    static RewardModelBinding disabled();
    static RewardModelBinding stub(double threshold = 5.5);
    static RewardModelBinding external(ExternalEndpoint endpoint, double threshold = 5.5);
};

// Deterministic stand-in reviewer: hashes the idea text into [1, 10). Lets
// gate behavior be exercised without any model.
double rm_stub_score(const std::string &idea);

struct PoolSampler {
    enum class Policy { UniformOverEvaluated, ScoreSoftmax, BestOnly };

    Policy policy = Policy::UniformOverEvaluated;
    double temperature = 1.0; // ScoreSoftmax; must be > 0
};

// Pick the parent candidate for the next round from the evaluated members of
// the pool. Throws std::runtime_error when nothing has been evaluated yet
// ("cold pool") and std::invalid_argument for a non-positive softmax
// temperature.
const Candidate &sample_parent(const Trajectory &trajectory, const PoolSampler &sampler, Rng &rng);

} // namespace extremal
