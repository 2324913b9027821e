#include "extremal/evaluate.hpp"

#include <stdexcept>

#include "extremal/evaluators/analysis.hpp"
#include "extremal/evaluators/discrete.hpp"
#include "extremal/evaluators/geometry.hpp"

namespace extremal {
namespace {

int param_or(const ProblemSpec &problem, const char *key, int fallback) {
    auto it = problem.params.find(key);
    return it == problem.params.end() ? fallback : it->second;
}

} // namespace

EvalResult evaluate_payload(const ProblemSpec &problem, const SolutionPayload &payload) {
    if (payload_kind_of(payload) != problem.payload_kind)
        throw std::invalid_argument(std::string("evaluate_payload: problem '") + problem.id +
                                    "' expects " + payload_kind_name(problem.payload_kind) +
                                    ", got " + payload_kind_name(payload_kind_of(payload)));

    switch (problem.payload_kind) {
    case PayloadKind::Circles: {
        CirclePackingConfig config;
        config.n = param_or(problem, "n", config.n);
        return eval_circle_packing(config, std::get<Circles>(payload));
    }
    case PayloadKind::PlanarPoints: {
        DistanceRatioConfig config;
        config.n = param_or(problem, "n", config.n);
        config.d = param_or(problem, "d", config.d);
        return eval_distance_ratio(config, std::get<PlanarPoints>(payload));
    }
    case PayloadKind::SpherePoints: {
        SphericalCodeConfig config;
        config.n = param_or(problem, "n", config.n);
        return eval_spherical_code(config, std::get<SpherePoints>(payload));
    }
    case PayloadKind::StepHeights: {
        AutoconvConfig config;
        const auto &heights = std::get<StepHeights>(payload).heights;
        config.K = static_cast<int>(heights.size()); // continuum target: any grid
        return eval_autoconv_peak(config, std::get<StepHeights>(payload));
    }
    case PayloadKind::SignedHeights: {
        C3Config config;
        const auto &heights = std::get<SignedHeights>(payload).heights;
        config.N = static_cast<int>(heights.size()); // continuum target: any grid
        return eval_c3_bound(config, std::get<SignedHeights>(payload));
    }
    case PayloadKind::SignSequence: {
        LittlewoodConfig config;
        config.n = param_or(problem, "n", config.n);
        return eval_littlewood(config, std::get<SignSequence>(payload));
    }
    case PayloadKind::IndicatorSet: {
        MstdConfig config;
        config.N = param_or(problem, "N", config.N);
        return eval_mstd(config, std::get<IndicatorSet>(payload));
    }
    }
    throw std::invalid_argument("evaluate_payload: unknown payload kind");
}

} // namespace extremal
