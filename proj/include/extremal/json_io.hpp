#pragma once

#include <nlohmann/json_fwd.hpp>

#include "extremal/types.hpp"

namespace extremal {

// Payload wire formats (arrays of numbers; no floats-as-strings here):
//   Circles       {"circles": [[x, y, r], ...]}
//   PlanarPoints  {"points": [[c1..cd], ...]}
//   SpherePoints  {"points": [[x, y, z], ...]}
//   StepHeights   {"heights": [...]}
//   SignedHeights {"heights": [...]}
//   SignSequence  {"signs": [...]}        entries +/-1
//   IndicatorSet  {"indicators": [...]}   entries 0/1
nlohmann::json payload_to_json(const SolutionPayload &payload);

// Parse a payload of a known kind. Throws std::runtime_error with a
// field-level message on schema violations (wrong type, ragged rows,
// non-integer signs, ...). Range checks (coords in [0,1], unit norms) are the
// evaluator's job, not the parser's.
SolutionPayload payload_from_json(PayloadKind kind, const nlohmann::json &doc);

// EvalResult <-> JSON. Non-finite raw metrics cross the wire as the strings
// "inf"/"-inf" (JSON has no literal for them).
nlohmann::json result_to_json(const EvalResult &result);
EvalResult result_from_json(const nlohmann::json &doc);

// Candidate <-> JSON (one trajectory-log record). Result fields are flattened
// into the record: raw_metric / score / metrics / valid / reason appear at the
// top level when the candidate was evaluated.
nlohmann::json candidate_to_json(const Candidate &cand);
Candidate candidate_from_json(const nlohmann::json &doc, PayloadKind kind);

// One-document run summary: candidate counts by status plus, when a best
// exists, its round / raw metric / score, the metric in reporting units, and
// excel@best against the human baseline.
nlohmann::json trajectory_summary(const Trajectory &trajectory);

} // namespace extremal
