#include "extremal/loop/bindings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "extremal/hash.hpp"
#include "extremal/solvers/c3_ga.hpp"
#include "extremal/solvers/circle_packing.hpp"
#include "extremal/solvers/constructions.hpp"
#include "extremal/solvers/distance_ratio_sa.hpp"
#include "extremal/solvers/spherical_greedy.hpp"
#include "extremal/trajectory.hpp"

namespace extremal {

GeneratorBinding GeneratorBinding::scripted(std::vector<ScriptedStep> steps) {
    if (steps.empty())
        throw std::invalid_argument("scripted generator: empty script");
    GeneratorBinding binding;
    binding.kind = Kind::Scripted;
    binding.script = std::move(steps);
    return binding;
}

GeneratorBinding GeneratorBinding::mutation(double jitter) {
    if (jitter < 0.0 || jitter >= 1.0)
        throw std::invalid_argument("mutation generator: jitter must be in [0, 1)");
    GeneratorBinding binding;
    binding.kind = Kind::Mutation;
    binding.mutation_jitter = jitter;
    return binding;
}

GeneratorBinding GeneratorBinding::external(ExternalEndpoint endpoint) {
    GeneratorBinding binding;
    binding.kind = Kind::External;
    binding.endpoint = std::move(endpoint);
    return binding;
}

RewardModelBinding RewardModelBinding::disabled() { return {}; }

RewardModelBinding RewardModelBinding::stub(double threshold) {
    RewardModelBinding binding;
    binding.kind = Kind::Stub;
    binding.threshold = threshold;
    return binding;
}

RewardModelBinding RewardModelBinding::external(ExternalEndpoint endpoint, double threshold) {
    RewardModelBinding binding;
    binding.kind = Kind::External;
    binding.threshold = threshold;
    binding.endpoint = std::move(endpoint);
    return binding;
}

double rm_stub_score(const std::string &idea) {
    // Hash of the idea text folded into [1, 10).
    return 1.0 + static_cast<double>(fnv1a64(idea) % 9000ULL) / 1000.0;
}

SolutionPayload mutation_payload(const ProblemSpec &problem, std::uint64_t round_seed,
                                 double jitter) {
    Rng rng(round_seed);
    // Multiplicative knob jitter in [1-j, 1+j]; 1.0 when disabled.
    const double knob = jitter > 0.0 ? rng.uniform(1.0 - jitter, 1.0 + jitter) : 1.0;

    if (problem.id == "packing-circles-26" || problem.id == "packing-circles-32") {
        PackingParams params;
        params.n = problem.params.at("n");
        params.refine_iterations =
            std::max(5, static_cast<int>(std::lround(params.refine_iterations * knob)));
        params.seed = rng.next_u64();
        return pack_circles_baseline(params);
    }
    if (problem.id == "max-min-ratio") {
        const int d = problem.params.at("d");
        SaParams params = sa_default_params(d);
        params.perturbation_factor *= knob;
        params.seed = rng.next_u64();
        return sa_min_distance_ratio(params, problem.params.at("n"), d);
    }
    if (problem.id == "third-autocorrelation") {
        GaParams params;
        params.population_size = 16;
        params.num_intervals = 8;
        params.generations = 25;
        params.mutation_rate = std::clamp(0.1 * knob, 0.0, 1.0);
        params.fitness_mode = FitnessMode::MinimizeC;
        params.seed = rng.next_u64();
        return ga_c3_heights(params);
    }
    if (problem.id == "spherical-code-30")
        return greedy_spherical_code(problem.params.at("n"), rng.next_u64());
    if (problem.id == "autoconv-peak") {
        // Multiplicative noise on the cos^2 profile; heights stay nonnegative.
        StepHeights heights = autoconv_candidate(problem.params.at("K"), DensityShape::Cos2);
        for (double &h : heights.heights)
            h = std::max(0.0, h * (1.0 + 0.05 * rng.normal()));
        return heights;
    }
    if (problem.id == "littlewood-512") {
        // A few random sign flips on the Rudin-Shapiro sequence.
        SignSequence seq = rudin_shapiro(problem.params.at("n"));
        const std::uint64_t flips = 1 + rng.below(4);
        for (std::uint64_t f = 0; f < flips; ++f) {
            const std::size_t at = static_cast<std::size_t>(rng.below(seq.signs.size()));
            seq.signs[at] = -seq.signs[at];
        }
        return seq;
    }
    if (problem.id == "mstd-30") {
        // Toggle one indicator; revert a toggle that would empty the set.
        IndicatorSet set = conway_mstd_baseline(problem.params.at("N"));
        const std::size_t at = static_cast<std::size_t>(rng.below(set.indicators.size()));
        set.indicators[at] ^= 1;
        if (std::count(set.indicators.begin(), set.indicators.end(), 1) == 0)
            set.indicators[at] = 1;
        return set;
    }
    throw std::invalid_argument("mutation_payload: no baseline solver for problem '" +
                                problem.id + "'");
}

const Candidate &sample_parent(const Trajectory &trajectory, const PoolSampler &sampler,
                               Rng &rng) {
    std::vector<std::size_t> evaluated;
    for (std::size_t i = 0; i < trajectory.steps.size(); ++i)
        if (trajectory.steps[i].status == CandidateStatus::Evaluated)
            evaluated.push_back(i);
    if (evaluated.empty())
        throw std::runtime_error("sample_parent: pool has no evaluated candidate");

    switch (sampler.policy) {
    case PoolSampler::Policy::UniformOverEvaluated:
        return trajectory.steps[evaluated[rng.below(evaluated.size())]];
    case PoolSampler::Policy::BestOnly:
        // best_index is an evaluated candidate whenever the pool has one.
        return trajectory.steps[static_cast<std::size_t>(trajectory.best_index)];
    case PoolSampler::Policy::ScoreSoftmax: {
        if (!(sampler.temperature > 0.0))
            throw std::invalid_argument("sample_parent: softmax temperature must be > 0");
        // Standard max-shifted softmax over candidate scores.
        double max_score = -std::numeric_limits<double>::infinity();
        for (std::size_t idx : evaluated)
            max_score = std::max(max_score, trajectory.steps[idx].result->score);
        std::vector<double> weights(evaluated.size());
        double total = 0.0;
        for (std::size_t i = 0; i < evaluated.size(); ++i) {
            weights[i] = std::exp((trajectory.steps[evaluated[i]].result->score - max_score) /
                                  sampler.temperature);
            total += weights[i];
        }
        const double draw = rng.next_double() * total;
        double cumulative = 0.0;
        for (std::size_t i = 0; i < evaluated.size(); ++i) {
            cumulative += weights[i];
            if (draw < cumulative)
                return trajectory.steps[evaluated[i]];
        }
        return trajectory.steps[evaluated.back()]; // draw == total edge
    }
    }
    throw std::invalid_argument("sample_parent: unknown policy");
}

} // namespace extremal
