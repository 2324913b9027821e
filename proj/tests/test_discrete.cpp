#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "extremal/evaluators/discrete.hpp"
#include "extremal/rng.hpp"
#include "extremal/solvers/constructions.hpp"

using namespace extremal;

namespace {

// Independent oracle: collect the elements, then enumerate sums and
// differences into ordered sets. Deliberately avoids the evaluator's
// indicator-range bookkeeping.
struct SetSizes {
    std::size_t sumset = 0;
    std::size_t diffset = 0;
};

SetSizes brute_force_sizes(const IndicatorSet &payload) {
    std::vector<int> elements;
    for (std::size_t i = 0; i < payload.indicators.size(); ++i)
        if (payload.indicators[i] == 1)
            elements.push_back(static_cast<int>(i));
    std::set<int> sums;
    std::set<int> diffs;
    for (int a : elements)
        for (int b : elements) {
            sums.insert(a + b);
            diffs.insert(a - b);
        }
    return {sums.size(), diffs.size()};
}

} // namespace

TEST_SUITE("discrete") {

TEST_CASE("the classical sum-dominant set scores 26/25") {
    MstdConfig config;
    const IndicatorSet conway = conway_mstd_baseline(30);
    const EvalResult result = eval_mstd(config, conway);
    REQUIRE(result.valid);
    CHECK(result.metrics.at("sumset") == doctest::Approx(26.0));
    CHECK(result.metrics.at("diffset") == doctest::Approx(25.0));
    CHECK(result.metrics.at("size") == doctest::Approx(8.0));
    CHECK(result.raw_metric == doctest::Approx(1.04).epsilon(1e-15));
    CHECK(result.score == doctest::Approx(1.04));
}

TEST_CASE("the baseline set needs room for its largest element") {
    CHECK_THROWS_AS(conway_mstd_baseline(14), std::invalid_argument);
    const IndicatorSet fits = conway_mstd_baseline(15);
    CHECK(fits.indicators.size() == 15);
    CHECK(fits.indicators[14] == 1);
}

TEST_CASE("evaluator matches a brute-force oracle on random sets") {
    Rng rng(421);
    MstdConfig config;
    config.N = 30;
    for (int trial = 0; trial < 300; ++trial) {
        IndicatorSet payload;
        payload.indicators.resize(30, 0);
        // Mix sparse and dense sets; retry if empty.
        const int density = 1 + static_cast<int>(rng.below(9));
        bool any = false;
        for (int &bit : payload.indicators) {
            bit = rng.below(10) < static_cast<std::uint64_t>(density) ? 1 : 0;
            any = any || bit == 1;
        }
        if (!any)
            payload.indicators[rng.below(30)] = 1;

        const EvalResult result = eval_mstd(config, payload);
        REQUIRE(result.valid);
        const SetSizes oracle = brute_force_sizes(payload);
        CHECK(result.metrics.at("sumset") == doctest::Approx(static_cast<double>(oracle.sumset)));
        CHECK(result.metrics.at("diffset") ==
              doctest::Approx(static_cast<double>(oracle.diffset)));
        CHECK(result.raw_metric ==
              doctest::Approx(static_cast<double>(oracle.sumset) /
                              static_cast<double>(oracle.diffset)));
    }
}

TEST_CASE("singletons and full sets are handled exactly") {
    MstdConfig config;
    config.N = 5;

    IndicatorSet singleton{{0, 0, 1, 0, 0}};
    const EvalResult single = eval_mstd(config, singleton);
    REQUIRE(single.valid);
    CHECK(single.metrics.at("sumset") == doctest::Approx(1.0));
    CHECK(single.metrics.at("diffset") == doctest::Approx(1.0));
    CHECK(single.raw_metric == doctest::Approx(1.0));

    IndicatorSet full{{1, 1, 1, 1, 1}};
    const EvalResult all = eval_mstd(config, full);
    REQUIRE(all.valid);
    CHECK(all.metrics.at("sumset") == doctest::Approx(9.0));
    CHECK(all.metrics.at("diffset") == doctest::Approx(9.0));
}

TEST_CASE("mstd rejections") {
    MstdConfig config;
    config.N = 5;
    SUBCASE("count") {
        CHECK(eval_mstd(config, IndicatorSet{{1, 0, 1}}).reason == "count");
    }
    SUBCASE("indicator") {
        CHECK(eval_mstd(config, IndicatorSet{{1, 0, 2, 0, 1}}).reason == "indicator");
        CHECK(eval_mstd(config, IndicatorSet{{1, 0, -1, 0, 1}}).reason == "indicator");
    }
    SUBCASE("empty") {
        CHECK(eval_mstd(config, IndicatorSet{{0, 0, 0, 0, 0}}).reason == "empty");
    }
}

} // TEST_SUITE
