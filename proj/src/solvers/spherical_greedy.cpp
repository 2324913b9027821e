#include "extremal/solvers/spherical_greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "extremal/rng.hpp"

namespace extremal {
namespace {

std::vector<double> normalized(std::vector<double> v) {
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    const double scale = 1.0 / std::max(norm, 1e-12);
    for (double &c : v)
        c *= scale;
    return v;
}

std::vector<double> random_unit(Rng &rng) {
    // Isotropic via normalized Gaussian triple.
    return normalized({rng.normal(), rng.normal(), rng.normal()});
}

} // namespace

std::optional<SpherePoints> platonic_seed(int n) {
    SpherePoints seed;
    switch (n) {
    case 2:
        seed.points = {{0, 0, 1}, {0, 0, -1}};
        return seed;
    case 3: {
        const double ang = 2.0 * 3.14159265358979323846 / 3.0;
        seed.points = {{1, 0, 0},
                       {std::cos(ang), std::sin(ang), 0},
                       {std::cos(2 * ang), std::sin(2 * ang), 0}};
        return seed;
    }
    case 4:
        seed.points = {normalized({1, 1, 1}), normalized({1, -1, -1}), normalized({-1, 1, -1}),
                       normalized({-1, -1, 1})};
        return seed;
    case 6:
        seed.points = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        return seed;
    case 8:
        for (int sx : {-1, 1})
            for (int sy : {-1, 1})
                for (int sz : {-1, 1})
                    seed.points.push_back(normalized({static_cast<double>(sx),
                                                      static_cast<double>(sy),
                                                      static_cast<double>(sz)}));
        return seed;
    case 12: {
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        for (double s : {-1.0, 1.0}) {
            seed.points.push_back(normalized({0, s, phi}));
            seed.points.push_back(normalized({0, s, -phi}));
            seed.points.push_back(normalized({s, phi, 0}));
            seed.points.push_back(normalized({s, -phi, 0}));
            seed.points.push_back(normalized({phi, 0, s}));
            seed.points.push_back(normalized({-phi, 0, s}));
        }
        return seed;
    }
    default:
        return std::nullopt;
    }
}

SpherePoints greedy_spherical_code(int n, std::uint64_t seed, int batch) {
    if (n < 1)
        throw std::invalid_argument("greedy_spherical_code: need n >= 1");
    if (batch < 1)
        throw std::invalid_argument("greedy_spherical_code: need batch >= 1");

    Rng rng(seed);
    SpherePoints code;
    if (auto platonic = platonic_seed(n))
        code = std::move(*platonic);
    else
        code.points.push_back(random_unit(rng));

    while (static_cast<int>(code.points.size()) < n) {
        // Pick the candidate whose closest existing point is farthest away,
        // i.e. smallest maximum cosine.
        std::vector<double> best_candidate;
        double best_cos = std::numeric_limits<double>::max();
        for (int c = 0; c < batch; ++c) {
            const auto candidate = random_unit(rng);
            double cos_max = -1.0;
            for (const auto &p : code.points) {
                const double dot =
                    candidate[0] * p[0] + candidate[1] * p[1] + candidate[2] * p[2];
                cos_max = std::max(cos_max, dot);
            }
            if (cos_max < best_cos) {
                best_cos = cos_max;
                best_candidate = candidate;
            }
        }
        code.points.push_back(best_candidate);
    }
    return code;
}

} // namespace extremal
