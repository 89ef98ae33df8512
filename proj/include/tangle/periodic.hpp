#pragma once

#include <optional>
#include <vector>

#include "tangle/map.hpp"

namespace tangle {

enum class OrbitClass { hyperbolic, elliptic, parabolic };

inline const char* orbit_class_name(OrbitClass c) {
    switch (c) {
        case OrbitClass::hyperbolic: return "hyperbolic";
        case OrbitClass::elliptic: return "elliptic";
        case OrbitClass::parabolic: return "parabolic";
    }
    return "?";
}

struct PeriodicOrbit {
    std::vector<Vec2> points;          // one orbit cycle, points[i+1] = f(points[i])
    int minimal_period = 1;
    std::array<cplx, 2> multipliers{}; // eigenvalues of D f^k at points[0]
    OrbitClass cls = OrbitClass::elliptic;
    bool near_parabolic = false;
    bool degenerate = false;           // D(f^n) - I singular at the root
    int elementary_up_to = 0;
    double residual = 0.0;

    const Vec2& representative() const { return points.front(); }
};

struct PeriodicSearchOptions {
    double newton_tol = 1e-12;
    int max_newton_iters = 60;
    int max_damping_halvings = 12;
    double dedup_radius = 1e-6;
    double tol_hyp = 1e-6;   // hyperbolic iff both | |lambda| - 1 | exceed this
    double tol_res = 1e-8;   // lambda = +-1 / resonance tolerance
    int n_max_elementary = 16;
    int threads = 1;
};

/// Multipliers -> class, following the surface trichotomy. `near_parabolic`
/// warns when the spectrum sits within tol_hyp of the unit circle boundary
/// without hitting +-1.
OrbitClass classify_multipliers(const std::array<cplx, 2>& mult, double tol_hyp, double tol_res,
                                bool* near_parabolic = nullptr);

/// Classify an orbit in place (multipliers from the map's jet chain).
void classify(const SmoothSymplecticMap& map, PeriodicOrbit& orbit,
              const PeriodicSearchOptions& opts = {});

/// Largest N <= n_max with |lambda^j - 1| >= tol_res for all multipliers and
/// all 1 <= j <= N.
int is_elementary(const PeriodicOrbit& orbit, int n_max, double tol_res = 1e-8);

/// Damped Newton search for points fixed by f^n, seeded on a uniform
/// grid_res x grid_res grid. Returned orbits are deduplicated orbit classes
/// with minimal period dividing n and residual below tol.
std::vector<PeriodicOrbit> find_periodic_points(const SmoothSymplecticMap& map, int n,
                                                int grid_res,
                                                const PeriodicSearchOptions& opts = {});

/// Jacobian of f^n along the orbit of x (chart points, wrap-aware).
Mat2 dfn(const SmoothSymplecticMap& map, Vec2 x, int n);

/// Number of points (not orbits) of period dividing n in a search result.
long long count_points(const std::vector<PeriodicOrbit>& orbits, int n);

}  // namespace tangle
