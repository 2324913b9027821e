#include "extremal/evaluators/discrete.hpp"

#include <limits>
#include <vector>

namespace extremal {

EvalResult eval_mstd(const MstdConfig &config, const IndicatorSet &payload) {
    const auto &ind = payload.indicators;
    const auto invalid = [](const char *reason) {
        EvalResult result;
        result.valid = false;
        result.raw_metric = -std::numeric_limits<double>::infinity();
        result.score = -1.0;
        result.reason = reason;
        return result;
    };

    if (static_cast<int>(ind.size()) != config.N || config.N <= 0)
        return invalid("count");
    std::vector<int> elements;
    for (std::size_t i = 0; i < ind.size(); ++i) {
        if (ind[i] != 0 && ind[i] != 1)
            return invalid("indicator");
        if (ind[i] == 1)
            elements.push_back(static_cast<int>(i));
    }
    if (elements.empty())
        return invalid("empty");

    const int n = config.N;
    std::vector<char> sums(static_cast<std::size_t>(2 * n - 1), 0);   // a+b in [0, 2N-2]
    std::vector<char> diffs(static_cast<std::size_t>(2 * n - 1), 0);  // a-b shifted by N-1
    for (int a : elements) {
        for (int b : elements) {
            sums[static_cast<std::size_t>(a + b)] = 1;
            diffs[static_cast<std::size_t>(a - b + n - 1)] = 1;
        }
    }
    int sumset = 0;
    int diffset = 0;
    for (char s : sums)
        sumset += s;
    for (char d : diffs)
        diffset += d;

    const double ratio = static_cast<double>(sumset) / static_cast<double>(diffset);

    EvalResult result;
    result.valid = true;
    result.raw_metric = ratio;
    result.score = ratio;
    result.metrics["sumset"] = static_cast<double>(sumset);
    result.metrics["diffset"] = static_cast<double>(diffset);
    result.metrics["size"] = static_cast<double>(elements.size());
    return result;
}

} // namespace extremal
