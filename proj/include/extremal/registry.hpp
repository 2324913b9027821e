#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extremal/types.hpp"

namespace extremal {

// The eight benchmark problems, in canonical (reporting) order.
// Raw metrics / targets:
//   packing-circles-26     sum of radii, 26 circles in the unit square   (max)
//   packing-circles-32     sum of radii, 32 circles                      (max)
//   max-min-ratio          max/min pairwise distance, 16 points in R^2   (min)
//   third-autocorrelation  scale-free upper bound for min C3             (min)
//   spherical-code-30      min pairwise angle of 30 unit vectors         (max)
//   autoconv-peak          sup of f*f for a unit-mass step density       (min)
//   littlewood-512         sampled sup |P| on the unit circle, n=512     (min)
//   mstd-30                |A+A| / |A-A| for A ⊆ {0..29}                 (max)
const std::vector<ProblemSpec> &problem_registry();

// Lookup by CLI id. Nullopt for unknown ids.
std::optional<ProblemSpec> find_problem(const std::string &id);

// Ids in registry order, for --help text and the benchmark default set.
std::vector<std::string> problem_ids();

} // namespace extremal
