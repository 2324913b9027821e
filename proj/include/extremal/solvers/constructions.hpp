#pragma once

#include <optional>
#include <string>

#include "extremal/types.hpp"

namespace extremal {

// First n terms of the Rudin-Shapiro sign sequence: a_k = (-1)^(number of
// "11" bit pairs in k). Sampled sup |P| is exactly sqrt(2n) = 32 for n = 512.
// Throws std::invalid_argument for n <= 0.
SignSequence rudin_shapiro(int n);

// Closed-form step-density candidates on [-1/2, 1/2], heights sampled at
// x = -1 + 2i/(K-1) (endpoints included, K >= 2). Not normalized; the
// evaluator rescales to unit mass.
enum class DensityShape { Box, Triangle, Cos2, Gauss };

std::optional<DensityShape> density_shape_from_name(const std::string &name);
const char *density_shape_name(DensityShape shape);

StepHeights autoconv_candidate(int k, DensityShape shape);

// Conway's sum-dominant set {0,2,3,4,7,11,12,14} as an indicator vector over
// {0..N-1}; |A+A|/|A-A| = 26/25 = 1.04. Throws std::invalid_argument for
// N < 15 (the set would not fit).
IndicatorSet conway_mstd_baseline(int n = 30);

} // namespace extremal
