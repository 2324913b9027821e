#include "extremal/solvers/baseline.hpp"

#include <stdexcept>

#include "extremal/solvers/c3_ga.hpp"
#include "extremal/solvers/circle_packing.hpp"
#include "extremal/solvers/constructions.hpp"
#include "extremal/solvers/distance_ratio_sa.hpp"
#include "extremal/solvers/spherical_greedy.hpp"

namespace extremal {

SolutionPayload baseline_payload(const ProblemSpec &problem, std::uint64_t seed) {
    if (problem.id == "packing-circles-26" || problem.id == "packing-circles-32") {
        PackingParams params;
        params.n = problem.params.at("n");
        params.seed = seed;
        return pack_circles_baseline(params);
    }
    if (problem.id == "max-min-ratio") {
        const int d = problem.params.at("d");
        SaParams params = sa_default_params(d);
        params.seed = seed;
        return sa_min_distance_ratio(params, problem.params.at("n"), d);
    }
    if (problem.id == "third-autocorrelation") {
        GaParams params;
        params.seed = seed;
        return ga_c3_heights(params);
    }
    if (problem.id == "spherical-code-30")
        return greedy_spherical_code(problem.params.at("n"), seed);
    if (problem.id == "autoconv-peak")
        return autoconv_candidate(problem.params.at("K"), DensityShape::Cos2);
    if (problem.id == "littlewood-512")
        return rudin_shapiro(problem.params.at("n"));
    if (problem.id == "mstd-30")
        return conway_mstd_baseline(problem.params.at("N"));
    throw std::runtime_error("no baseline construction for problem \"" + problem.id + "\"");
}

} // namespace extremal
