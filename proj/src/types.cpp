#include "extremal/types.hpp"

namespace extremal {

// PayloadKind values are the variant alternative indices; keep them in sync.
static_assert(std::is_same_v<std::variant_alternative_t<0, SolutionPayload>, Circles>);
static_assert(std::is_same_v<std::variant_alternative_t<1, SolutionPayload>, PlanarPoints>);
static_assert(std::is_same_v<std::variant_alternative_t<2, SolutionPayload>, SpherePoints>);
static_assert(std::is_same_v<std::variant_alternative_t<3, SolutionPayload>, StepHeights>);
static_assert(std::is_same_v<std::variant_alternative_t<4, SolutionPayload>, SignedHeights>);
static_assert(std::is_same_v<std::variant_alternative_t<5, SolutionPayload>, SignSequence>);
static_assert(std::is_same_v<std::variant_alternative_t<6, SolutionPayload>, IndicatorSet>);

PayloadKind payload_kind_of(const SolutionPayload &payload) {
    return static_cast<PayloadKind>(payload.index());
}

const char *payload_kind_name(PayloadKind kind) {
    switch (kind) {
    case PayloadKind::Circles: return "circles";
    case PayloadKind::PlanarPoints: return "planar_points";
    case PayloadKind::SpherePoints: return "sphere_points";
    case PayloadKind::StepHeights: return "step_heights";
    case PayloadKind::SignedHeights: return "signed_heights";
    case PayloadKind::SignSequence: return "sign_sequence";
    case PayloadKind::IndicatorSet: return "indicator_set";
    }
    return "unknown";
}

const char *candidate_status_name(CandidateStatus status) {
    switch (status) {
    case CandidateStatus::Evaluated: return "evaluated";
    case CandidateStatus::RmRejected: return "rm_rejected";
    case CandidateStatus::ExecFailed: return "exec_failed";
    }
    return "unknown";
}

std::optional<CandidateStatus> candidate_status_from_name(const std::string &name) {
    if (name == "evaluated") return CandidateStatus::Evaluated;
    if (name == "rm_rejected") return CandidateStatus::RmRejected;
    if (name == "exec_failed") return CandidateStatus::ExecFailed;
    return std::nullopt;
}

} // namespace extremal
