#include "extremal/registry.hpp"

namespace extremal {

const std::vector<ProblemSpec> &problem_registry() {
    static const std::vector<ProblemSpec> registry = {
        {"packing-circles-26", Direction::HigherBetter, PayloadKind::Circles,
         {{"n", 26}}, 2.634, ""},
        {"packing-circles-32", Direction::HigherBetter, PayloadKind::Circles,
         {{"n", 32}}, 2.936, ""},
        // Human best quoted as the squared ratio (R^2 = 12.89); the evaluator's
        // raw metric is R itself.
        {"max-min-ratio", Direction::LowerBetter, PayloadKind::PlanarPoints,
         {{"n", 16}, {"d", 2}}, 12.89, "R2"},
        {"third-autocorrelation", Direction::LowerBetter, PayloadKind::SignedHeights,
         {}, 1.4581, ""},
        {"spherical-code-30", Direction::HigherBetter, PayloadKind::SpherePoints,
         {{"n", 30}}, 0.67365, ""},
        {"autoconv-peak", Direction::LowerBetter, PayloadKind::StepHeights,
         {{"K", 128}}, 0.755, ""},
        {"littlewood-512", Direction::LowerBetter, PayloadKind::SignSequence,
         {{"n", 512}}, 32.0, ""},
        {"mstd-30", Direction::HigherBetter, PayloadKind::IndicatorSet,
         {{"N", 30}}, 1.04, ""},
    };
    return registry;
}

std::optional<ProblemSpec> find_problem(const std::string &id) {
    for (const auto &spec : problem_registry())
        if (spec.id == id)
            return spec;
    return std::nullopt;
}

std::vector<std::string> problem_ids() {
    std::vector<std::string> ids;
    for (const auto &spec : problem_registry())
        ids.push_back(spec.id);
    return ids;
}

} // namespace extremal
