#pragma once

#include <cstdint>
#include <span>

#include "extremal/rng.hpp"
#include "extremal/types.hpp"

namespace extremal {

// Multi-stage packing heuristic: hexagonal/grid seeding, iterative radius
// growth with jiggle, a center-perturbation densification pass, a soft
// repulsive relaxation, multi-start over the seeding randomness, and a
// remove-two-smallest / reinsert densification loop.
struct PackingParams {
    int n = 26;
    double square_size = 1.0;
    int starts = 0;              // 0 = auto: max(200, 20n) for n <= 50, else max(100, 10n)
    int refine_iterations = 40;  // growth sweeps per start
    int densify_rounds = 8;
    int reinsert_samples = 500;
    double early_exit_threshold = 0.995; // stop starts at this fraction of the hex baseline
    std::uint64_t seed = 0;
};

// Largest radius for a circle centered at (x, y) that stays inside the square
// and clear of every circle in `others` (index `skip` ignored); never
// negative.
double max_circle_radius(double x, double y, std::span<const Circle> others, double square_size,
                         int skip = -1);

// Hexagonal-lattice seed; may return fewer than n circles when the lattice
// estimate runs out of rows.
Circles hexagonal_packing(int n, double square_size = 1.0);

// One radius-growth sweep in the given order: each circle's radius is reset
// to its maximum feasible value with all other circles fixed. Radii never
// shrink (the configuration is feasible before and after), so the sum is
// monotone non-decreasing across the sweep.
void grow_radii_sweep(std::vector<Circle> &circles, double square_size,
                      std::span<const int> order);

// Full refinement: `iterations` randomized growth sweeps with a periodic
// jiggle, then a keep-if-better center-perturbation pass, then one soft
// repulsive relaxation (which recomputes radii and may trade sum for
// feasibility margin).
void refine_circles(std::vector<Circle> &circles, double square_size, int iterations, Rng &rng,
                    int perturb_interval = 3);

// Full pipeline. Deterministic for fixed params; every intermediate
// configuration is feasible, and the returned one is the best (by radius
// sum) of the stable snapshots. Throws std::invalid_argument for n < 0 or
// bad sizes; n == 0 returns empty, n == 1 returns the centered half-radius
// circle.
Circles pack_circles_baseline(const PackingParams &params);

} // namespace extremal
