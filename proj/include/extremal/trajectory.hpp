#pragma once

#include <filesystem>
#include <iosfwd>

#include "extremal/types.hpp"

namespace extremal {

// Append `cand` to the trajectory and advance best_index iff the candidate is
// Evaluated with a strictly better score than the current best (ties keep the
// earlier candidate). Throws std::invalid_argument when cand.round != the
// next expected round (steps.size() with round-0 at index 0) or when an
// Evaluated candidate lacks payload/result.
void update_best(Trajectory &trajectory, Candidate cand);

// Score of the current best candidate; -infinity while best_index == -1.
double best_score(const Trajectory &trajectory);

// True when at least one candidate has been evaluated successfully.
bool has_evaluated(const Trajectory &trajectory);

// ---------------------------------------------------------------------------
// Persistence: one JSON document per line, append-only. Round 0 is the first
// line; line k holds round k. Reading replays update_best over every line, so
// best_index never needs to be stored.
// ---------------------------------------------------------------------------

void append_candidate_line(std::ostream &out, const Candidate &cand);

// Parse one JSONL line. The payload kind comes from the problem (payloads do
// not self-describe). Throws std::runtime_error on malformed lines.
Candidate parse_candidate_line(const std::string &line, PayloadKind kind);

// Load a full log; throws std::runtime_error on IO failure or a line whose
// round breaks the 0,1,2,... sequence.
Trajectory read_trajectory_log(const std::filesystem::path &path, const ProblemSpec &problem);

} // namespace extremal
