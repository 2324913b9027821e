#include <doctest.h>

#include <stdexcept>

#include "extremal/registry.hpp"
#include "extremal/scoring.hpp"

using namespace extremal;

TEST_SUITE("scoring") {

TEST_CASE("higher-better scores pass the raw metric through") {
    CHECK(normalize_score(Direction::HigherBetter, 2.936, true) == doctest::Approx(2.936));
    CHECK(normalize_score(Direction::HigherBetter, 0.0, true) == 0.0);
}

TEST_CASE("lower-better scores invert the raw metric") {
    CHECK(normalize_score(Direction::LowerBetter, 32.0, true) == doctest::Approx(0.03125));
    CHECK(normalize_score(Direction::LowerBetter, 0.5, true) == doctest::Approx(2.0));
}

TEST_CASE("invalid results score -1 regardless of direction or metric") {
    CHECK(normalize_score(Direction::HigherBetter, 123.0, false) == -1.0);
    CHECK(normalize_score(Direction::LowerBetter, -5.0, false) == -1.0);
}

TEST_CASE("a non-positive lower-better metric cannot be scored") {
    CHECK_THROWS_AS(normalize_score(Direction::LowerBetter, 0.0, true), std::domain_error);
    CHECK_THROWS_AS(normalize_score(Direction::LowerBetter, -1.0, true), std::domain_error);
}

TEST_CASE("score ordering matches the optimization direction") {
    // For both directions, the better raw metric must produce the larger score.
    CHECK(normalize_score(Direction::HigherBetter, 3.0, true) >
          normalize_score(Direction::HigherBetter, 2.0, true));
    CHECK(normalize_score(Direction::LowerBetter, 2.0, true) >
          normalize_score(Direction::LowerBetter, 3.0, true));
}

TEST_CASE("excel@best is signed by the optimization direction") {
    // Beating the baseline is positive either way.
    CHECK(excel_at_best(Direction::HigherBetter, 2.939, 2.936) ==
          doctest::Approx((2.939 - 2.936) / 2.936));
    CHECK(excel_at_best(Direction::LowerBetter, 12.92, 12.89) ==
          doctest::Approx(-(12.92 - 12.89) / 12.89));
    // Matching it exactly is zero.
    CHECK(excel_at_best(Direction::LowerBetter, 32.0, 32.0) == 0.0);
    CHECK(excel_at_best(Direction::HigherBetter, 1.04, 1.04) == 0.0);
    // Falling short is negative either way.
    CHECK(excel_at_best(Direction::HigherBetter, 0.5130, 0.6736) < 0.0);
    CHECK(excel_at_best(Direction::LowerBetter, 35.746, 1.458) < 0.0);
}

TEST_CASE("excel@best refuses a zero baseline") {
    CHECK_THROWS_AS(excel_at_best(Direction::HigherBetter, 1.0, 0.0), std::domain_error);
}

TEST_CASE("reporting units square the distance ratio and nothing else") {
    const ProblemSpec ratio = find_problem("max-min-ratio").value();
    CHECK(reported_metric(ratio, 3.0) == doctest::Approx(9.0));
    const ProblemSpec packing = find_problem("packing-circles-32").value();
    CHECK(reported_metric(packing, 2.9395) == doctest::Approx(2.9395));
}

TEST_CASE("registry lists the eight problems in reporting order") {
    const auto ids = problem_ids();
    REQUIRE(ids.size() == 8);
    CHECK(ids.front() == "packing-circles-26");
    CHECK(ids.back() == "mstd-30");
    CHECK_FALSE(find_problem("unknown-problem").has_value());
    for (const auto &id : ids) {
        const auto spec = find_problem(id);
        REQUIRE(spec.has_value());
        CHECK(spec->human_best > 0.0);
    }
}

} // TEST_SUITE
