#pragma once

#include <cstdint>

#include "extremal/types.hpp"

namespace extremal {

// Simulated-annealing search for point sets minimizing the max/min pairwise
// distance ratio in [0,1]^d. The schedule blends adaptive cooling
// (acceptance-rate feedback), temperature-scaled perturbations with
// repulsive moves away from the nearest neighbor, periodic inverse-distance
// neighbor smoothing, stagnation-triggered reinjection, and a final
// keep-if-better Gaussian refinement stage.
struct SaParams {
    int iterations = 3000;
    double initial_temperature = 10.0;
    double cooling_rate = 0.998;
    double perturbation_factor = 0.15;
    int window_size = 50;        // stagnation window (reinjection trigger)
    int cooling_window = 100;    // acceptance-rate window for adaptive cooling
    int smoothing_interval = 150;
    int reheat_interval = 500;   // d > 2 only: floor T at 0.3 * T0 periodically
    std::uint64_t seed = 0;
};

// Dimension-adapted defaults: d <= 2 keeps the struct defaults above
// (3000 iterations, cooling 0.998, step factor 0.15, smoothing every
// iterations/20); d > 2 runs longer and cooler (6000, 0.996, 0.12,
// smoothing every iterations/30).
SaParams sa_default_params(int d);

// Throws std::invalid_argument for n < 2, d < 1, or non-positive schedule
// parameters. Deterministic for a fixed (params, n, d).
PlanarPoints sa_min_distance_ratio(const SaParams &params, int n, int d);

// Metropolis rule used by the solver, exposed for property checks:
// negative deltas always accept; otherwise accept when u < exp(-delta/T).
bool sa_accepts(double delta, double temperature, double u);

} // namespace extremal
