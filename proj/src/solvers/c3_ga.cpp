#include "extremal/solvers/c3_ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "extremal/evaluators/analysis.hpp"
#include "extremal/rng.hpp"

namespace extremal {
namespace {

// Fitness wraps the evaluator's C value so that "better" is always larger:
// MinimizeC uses -C (invalid -> -inf), MaximizeC uses C (invalid -> 0, the
// reference convention where an invalid individual simply never wins).
double fitness_of(const std::vector<double> &heights, FitnessMode mode) {
    C3Config config;
    config.N = static_cast<int>(heights.size());
    const EvalResult result = eval_c3_bound(config, SignedHeights{heights});
    if (mode == FitnessMode::MaximizeC)
        return result.valid ? result.raw_metric : 0.0;
    return result.valid ? -result.raw_metric : -std::numeric_limits<double>::infinity();
}

} // namespace

SignedHeights ga_c3_heights(const GaParams &params) {
    if (params.population_size < 1 || params.num_intervals < 1 || params.generations < 0)
        throw std::invalid_argument("ga_c3_heights: non-positive size");
    if (params.mutation_rate < 0.0 || params.mutation_rate > 1.0 || params.crossover_rate < 0.0 ||
        params.crossover_rate > 1.0)
        throw std::invalid_argument("ga_c3_heights: rate outside [0, 1]");

    Rng rng(params.seed);
    const std::size_t pop = static_cast<std::size_t>(params.population_size);
    const std::size_t dim = static_cast<std::size_t>(params.num_intervals);

    std::vector<std::vector<double>> population(pop, std::vector<double>(dim));
    for (auto &individual : population)
        for (double &h : individual)
            h = rng.uniform(-1.0, 1.0);

    std::vector<double> best_solution;
    double best_fitness = -std::numeric_limits<double>::infinity();
    const auto track_best = [&](const std::vector<double> &fitness) {
        std::size_t arg = 0;
        for (std::size_t i = 1; i < pop; ++i)
            if (fitness[i] > fitness[arg])
                arg = i;
        if (fitness[arg] > best_fitness && std::isfinite(fitness[arg])) {
            best_fitness = fitness[arg];
            best_solution = population[arg];
        }
    };

    if (params.generations == 0) {
        std::vector<double> fitness(pop);
        for (std::size_t i = 0; i < pop; ++i)
            fitness[i] = fitness_of(population[i], params.fitness_mode);
        track_best(fitness);
        return SignedHeights{best_solution.empty() ? population[0] : best_solution};
    }

    for (int gen = 0; gen < params.generations; ++gen) {
        std::vector<double> fitness(pop);
        for (std::size_t i = 0; i < pop; ++i)
            fitness[i] = fitness_of(population[i], params.fitness_mode);
        track_best(fitness);

        // Tournament of two distinct competitors per offspring slot.
        std::vector<std::vector<double>> next(pop);
        for (std::size_t i = 0; i < pop; ++i) {
            std::size_t a = static_cast<std::size_t>(rng.below(pop));
            std::size_t b = a;
            if (pop > 1)
                while (b == a)
                    b = static_cast<std::size_t>(rng.below(pop));
            next[i] = population[fitness[a] >= fitness[b] ? a : b];
        }

        // One-point crossover over adjacent pairs; needs an interior cut, so
        // genomes shorter than 3 skip it.
        if (dim >= 3) {
            for (std::size_t i = 0; i + 1 < pop; i += 2) {
                if (rng.next_double() < params.crossover_rate) {
                    const std::size_t cut =
                        1 + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(dim - 2)));
                    for (std::size_t c = cut; c < dim; ++c)
                        std::swap(next[i][c], next[i + 1][c]);
                }
            }
        }

        // Per-individual single-gene Gaussian bump.
        for (std::size_t i = 0; i < pop; ++i) {
            if (rng.next_double() < params.mutation_rate) {
                const std::size_t gene = static_cast<std::size_t>(rng.below(dim));
                next[i][gene] = std::clamp(next[i][gene] + rng.normal(0.0, 0.1), -2.0, 2.0);
            }
        }

        population = std::move(next);
    }

    // The final evolved population is deliberately not evaluated (fitness is
    // sampled at generation entry), matching the update order above.
    return SignedHeights{best_solution.empty() ? population[0] : best_solution};
}

} // namespace extremal
