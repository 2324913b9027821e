#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "extremal/evaluate.hpp"
#include "extremal/registry.hpp"
#include "extremal/solvers/constructions.hpp"

using namespace extremal;

TEST_SUITE("evaluate") {

TEST_CASE("every registered problem evaluates its own payload kind") {
    // One cheap, well-formed payload per problem family.
    const ProblemSpec mstd = find_problem("mstd-30").value();
    CHECK(evaluate_payload(mstd, conway_mstd_baseline(30)).valid);

    const ProblemSpec little = find_problem("littlewood-512").value();
    CHECK(evaluate_payload(little, rudin_shapiro(512)).valid);

    const ProblemSpec autoconv = find_problem("autoconv-peak").value();
    CHECK(evaluate_payload(autoconv, autoconv_candidate(128, DensityShape::Cos2)).valid);

    const ProblemSpec c3 = find_problem("third-autocorrelation").value();
    CHECK(evaluate_payload(c3, SignedHeights{{1.0, 1.0, 1.0, 1.0}}).valid);
}

TEST_CASE("grid-free problems adapt to the payload resolution") {
    const ProblemSpec autoconv = find_problem("autoconv-peak").value();
    // params say K = 128, but a 64-cell density is a legitimate candidate.
    const EvalResult at64 = evaluate_payload(autoconv, autoconv_candidate(64, DensityShape::Box));
    REQUIRE(at64.valid);
    CHECK(at64.metrics.at("K") == doctest::Approx(64.0));

    const ProblemSpec c3 = find_problem("third-autocorrelation").value();
    const EvalResult at9 = evaluate_payload(c3, SignedHeights{std::vector<double>(9, 2.0)});
    REQUIRE(at9.valid);
    CHECK(at9.metrics.at("N") == doctest::Approx(9.0));
    CHECK(at9.raw_metric == doctest::Approx(2.0));
}

TEST_CASE("size-pinned problems reject mismatched payloads") {
    const ProblemSpec little = find_problem("littlewood-512").value();
    const EvalResult short_signs = evaluate_payload(little, rudin_shapiro(256));
    CHECK_FALSE(short_signs.valid);
    CHECK(short_signs.reason == "count");

    const ProblemSpec mstd = find_problem("mstd-30").value();
    const EvalResult short_set = evaluate_payload(mstd, IndicatorSet{{1, 0, 1}});
    CHECK_FALSE(short_set.valid);
    CHECK(short_set.reason == "count");
}

TEST_CASE("a payload of the wrong kind is a caller bug") {
    const ProblemSpec mstd = find_problem("mstd-30").value();
    CHECK_THROWS_AS(evaluate_payload(mstd, rudin_shapiro(512)), std::invalid_argument);
    const ProblemSpec packing = find_problem("packing-circles-26").value();
    CHECK_THROWS_AS(evaluate_payload(packing, SignedHeights{{1.0}}), std::invalid_argument);
}

} // TEST_SUITE
