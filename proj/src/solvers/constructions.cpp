#include "extremal/solvers/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace extremal {

SignSequence rudin_shapiro(int n) {
    if (n <= 0)
        throw std::invalid_argument("rudin_shapiro: n must be positive");
    SignSequence seq;
    seq.signs.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        unsigned x = static_cast<unsigned>(k);
        int parity = 0;
        int prev = 0;
        while (x) {
            const int bit = static_cast<int>(x & 1u);
            if (bit & prev) // adjacent "11" pair
                parity ^= 1;
            prev = bit;
            x >>= 1;
        }
        seq.signs[static_cast<std::size_t>(k)] = parity == 0 ? 1 : -1;
    }
    return seq;
}

std::optional<DensityShape> density_shape_from_name(const std::string &name) {
    if (name == "box") return DensityShape::Box;
    if (name == "triangle") return DensityShape::Triangle;
    if (name == "cos2") return DensityShape::Cos2;
    if (name == "gauss") return DensityShape::Gauss;
    return std::nullopt;
}

const char *density_shape_name(DensityShape shape) {
    switch (shape) {
    case DensityShape::Box: return "box";
    case DensityShape::Triangle: return "triangle";
    case DensityShape::Cos2: return "cos2";
    case DensityShape::Gauss: return "gauss";
    }
    return "unknown";
}

StepHeights autoconv_candidate(int k, DensityShape shape) {
    if (k < 2)
        throw std::invalid_argument("autoconv_candidate: need K >= 2");
    constexpr double pi = 3.14159265358979323846;
    StepHeights heights;
    heights.heights.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(k - 1);
        double h = 0.0;
        switch (shape) {
        case DensityShape::Box:
            h = 1.0;
            break;
        case DensityShape::Triangle:
            h = std::max(1.0 - std::abs(x), 0.0);
            break;
        case DensityShape::Cos2: {
            const double c = std::cos(pi * x / 2.0);
            h = c * c;
            break;
        }
        case DensityShape::Gauss:
            h = std::exp(-4.0 * x * x);
            break;
        }
        heights.heights[static_cast<std::size_t>(i)] = h;
    }
    return heights;
}

IndicatorSet conway_mstd_baseline(int n) {
    static constexpr int kConway[] = {0, 2, 3, 4, 7, 11, 12, 14};
    if (n < 15)
        throw std::invalid_argument("conway_mstd_baseline: need N >= 15");
    IndicatorSet set;
    set.indicators.assign(static_cast<std::size_t>(n), 0);
    for (int element : kConway)
        set.indicators[static_cast<std::size_t>(element)] = 1;
    return set;
}

} // namespace extremal
