#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace extremal {

// Whether a larger raw metric is better (sum of radii, min angle, MSTD ratio)
// or a smaller one is (distance ratio, autoconvolution peak, sup norm).
enum class Direction { HigherBetter, LowerBetter };

// ---------------------------------------------------------------------------
// Solution payloads. One alternative per problem family; evaluators take the
// concrete type, the registry dispatcher and the JSON layer work with the
// variant.
// ---------------------------------------------------------------------------

struct Circle {
    double x = 0.0;
    double y = 0.0;
    double r = 0.0;
};

struct Circles {
    std::vector<Circle> circles;
};

// Points in [0,1]^d, row-major; dim is the common coordinate count.
struct PlanarPoints {
    std::vector<std::vector<double>> points;
};

// Points intended to lie on the unit sphere in R^3.
struct SpherePoints {
    std::vector<std::vector<double>> points;
};

// Nonnegative step heights of a density on [-1/4, 1/4] (uniform grid).
struct StepHeights {
    std::vector<double> heights;
};

// Signed step heights of a function on [-1/2, 1/2] (uniform grid).
struct SignedHeights {
    std::vector<double> heights;
};

// Polynomial coefficients, each +1 or -1.
struct SignSequence {
    std::vector<int> signs;
};

// Characteristic vector of A ⊆ {0,...,N-1}; entries 0/1.
struct IndicatorSet {
    std::vector<int> indicators;
};

using SolutionPayload =
    std::variant<Circles, PlanarPoints, SpherePoints, StepHeights, SignedHeights, SignSequence,
                 IndicatorSet>;

enum class PayloadKind {
    Circles,
    PlanarPoints,
    SpherePoints,
    StepHeights,
    SignedHeights,
    SignSequence,
    IndicatorSet,
};

PayloadKind payload_kind_of(const SolutionPayload &payload);
const char *payload_kind_name(PayloadKind kind);

// ---------------------------------------------------------------------------
// Problem registry entries and evaluation results.
// ---------------------------------------------------------------------------

struct ProblemSpec {
    std::string id;           // stable CLI name, e.g. "packing-circles-26"
    Direction direction = Direction::HigherBetter;
    PayloadKind payload_kind = PayloadKind::Circles;
    std::map<std::string, int> params;  // size parameters (n, d, K, N)
    double human_best = 0.0;            // best known human/baseline raw value
    // Unit the reference table quotes the problem in when it differs from the
    // evaluator's raw metric ("R2" = squared distance ratio). Empty otherwise.
    std::string table_metric;
};

struct EvalResult {
    bool valid = false;
    double raw_metric = 0.0;  // +/-inf when invalid (worst value for direction)
    double score = -1.0;      // normalized, higher is better; -1.0 when invalid
    std::map<std::string, double> metrics;
    std::string reason;       // why invalid; empty for valid results
};

// Candidate produced by one discovery round (round 0 = the initial program).
enum class CandidateStatus { Evaluated, RmRejected, ExecFailed };

struct Candidate {
    int round = 0;
    std::string idea;
    std::optional<double> rm_score;
    std::optional<SolutionPayload> payload;
    std::optional<EvalResult> result;
    CandidateStatus status = CandidateStatus::ExecFailed;
    int parent_round = -1;  // -1 for round 0
};

struct Trajectory {
    ProblemSpec problem;
    std::vector<Candidate> steps;
    int best_index = -1;  // index into steps; -1 until an Evaluated candidate lands
};

const char *candidate_status_name(CandidateStatus status);
std::optional<CandidateStatus> candidate_status_from_name(const std::string &name);

} // namespace extremal
