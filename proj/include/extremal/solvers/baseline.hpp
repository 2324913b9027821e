#pragma once

#include <cstdint>

#include "extremal/types.hpp"

namespace extremal {

// The problem's published baseline construction, with its as-published
// parameterization: multi-start packing for the circle problems, simulated
// annealing for the distance ratio, the reference genetic algorithm for the
// third-autocorrelation bound, greedy placement for the spherical code, the
// cos^2 step profile for the autoconvolution peak, Rudin-Shapiro signs for
// the polynomial sup, and Conway's set for the sum-dominant problem.
// Deterministic given (problem, seed); seed is ignored by the closed-form
// constructions. Throws std::runtime_error for an unregistered problem.
SolutionPayload baseline_payload(const ProblemSpec &problem, std::uint64_t seed);

} // namespace extremal
