#pragma once

#include <cstdint>
#include <optional>

#include "extremal/types.hpp"

namespace extremal {

// Symmetric seeds on S^2 for n in {2, 3, 4, 6, 8, 12} (antipodal pair,
// equatorial triangle, tetrahedron, octahedron, cube, icosahedron);
// std::nullopt otherwise.
std::optional<SpherePoints> platonic_seed(int n);

// Farthest-point greedy: start from the platonic seed when one exists (a
// single random unit vector otherwise), then repeatedly draw a batch of
// random unit candidates and keep the one maximizing the min angle to the
// current set. Deterministic for fixed (n, seed, batch).
// Throws std::invalid_argument for n < 1 or batch < 1.
SpherePoints greedy_spherical_code(int n, std::uint64_t seed, int batch = 8000);

} // namespace extremal
