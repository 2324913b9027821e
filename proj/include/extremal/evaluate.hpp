#pragma once

#include "extremal/types.hpp"

namespace extremal {

// Evaluate a payload against a registered problem. Builds the evaluator
// config from problem.params. Size handling:
//   - autoconv-peak and third-autocorrelation target grid-size-independent
//     continuum quantities, so K (resp. N) adapts to the payload length and
//     params only record the solver default;
//   - every other problem pins its size; a mismatched payload is invalid
//     (reason "count").
// Throws std::invalid_argument when the payload kind does not match the
// problem (caller bug, not a domain failure).
EvalResult evaluate_payload(const ProblemSpec &problem, const SolutionPayload &payload);

} // namespace extremal
