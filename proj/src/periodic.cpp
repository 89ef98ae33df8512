#include "tangle/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace tangle {

namespace {

Vec2 displacement(Domain d, const Vec2& delta) {
    switch (d) {
        case Domain::torus: return wrap_half(delta);
        case Domain::sphere_chart: return {delta.x, wrap_half(delta.y)};
        case Domain::plane: return delta;
    }
    return delta;
}

double point_dist(Domain d, const Vec2& a, const Vec2& b) {
    return norm(displacement(d, a - b));
}

struct Root {
    Vec2 x;  // chart representative
    double residual;
    bool degenerate;
};

/// Damped Newton for f^n(x) = x with wrap-aware residual (this is Newton on
/// the lift X -> F^n(X) - X - m with m re-rounded from the current iterate).
std::optional<Root> newton_root(const SmoothSymplecticMap& map, Vec2 seed, int n,
                                const PeriodicSearchOptions& opts) {
    const Domain dom = map.domain();
    Vec2 x = map.wrap(seed);
    auto residual_at = [&](const Vec2& p) {
        Vec2 fx = p;
        for (int i = 0; i < n; ++i) fx = map.eval(fx);
        return displacement(dom, fx - p);
    };
    Vec2 r = residual_at(x);
    for (int it = 0; it < opts.max_newton_iters; ++it) {
        if (norm(r) < opts.newton_tol) return Root{x, norm(r), false};
        Mat2 J = dfn(map, x, n);
        J.a -= 1.0;
        J.d -= 1.0;
        if (std::abs(J.det()) < 1e-12 * std::max(1.0, J.max_abs() * J.max_abs())) {
            // singular linearization: accept only if already essentially at a root
            if (norm(r) < opts.newton_tol * 1e2) return Root{x, norm(r), true};
            return std::nullopt;
        }
        const Vec2 step = J.inverse() * r;
        double damp = 1.0;
        bool ok = false;
        for (int h = 0; h <= opts.max_damping_halvings; ++h) {
            const Vec2 cand = map.wrap(x - step * damp);
            const Vec2 rc = residual_at(cand);
            if (norm(rc) < norm(r)) {
                x = cand;
                r = rc;
                ok = true;
                break;
            }
            damp *= 0.5;
        }
        if (!ok) return std::nullopt;
    }
    if (norm(r) < opts.newton_tol) return Root{x, norm(r), false};
    return std::nullopt;
}

}  // namespace

Mat2 dfn(const SmoothSymplecticMap& map, Vec2 x, int n) {
    Mat2 J = Mat2::identity();
    Vec2 p = map.wrap(x);
    for (int i = 0; i < n; ++i) {
        const Jet2 j = map.jet(p, 1);
        J = j.linear() * J;
        p = map.wrap(j.value);
    }
    return J;
}

OrbitClass classify_multipliers(const std::array<cplx, 2>& mult, double tol_hyp, double tol_res,
                                bool* near_parabolic) {
    if (near_parabolic) *near_parabolic = false;
    double min_unit_gap = 1e300;  // distance of |lambda| from 1
    double min_pm1_gap = 1e300;   // distance of lambda from +-1
    for (const cplx& l : mult) {
        min_unit_gap = std::min(min_unit_gap, std::abs(std::abs(l) - 1.0));
        min_pm1_gap = std::min({min_pm1_gap, std::abs(l - cplx{1, 0}), std::abs(l + cplx{1, 0})});
    }
    if (min_pm1_gap < tol_res) return OrbitClass::parabolic;
    if (min_unit_gap > tol_hyp) return OrbitClass::hyperbolic;
    // spectrum numerically on the unit circle away from +-1
    if (near_parabolic) *near_parabolic = (min_pm1_gap < 1e-3);
    return OrbitClass::elliptic;
}

void classify(const SmoothSymplecticMap& map, PeriodicOrbit& orbit,
              const PeriodicSearchOptions& opts) {
    const Mat2 J = dfn(map, orbit.representative(), orbit.minimal_period);
    orbit.multipliers = eigenvalues(J);
    orbit.cls = classify_multipliers(orbit.multipliers, opts.tol_hyp, opts.tol_res,
                                     &orbit.near_parabolic);
    orbit.elementary_up_to = is_elementary(orbit, opts.n_max_elementary, opts.tol_res);
}

int is_elementary(const PeriodicOrbit& orbit, int n_max, double tol_res) {
    for (int j = 1; j <= n_max; ++j) {
        for (const cplx& l : orbit.multipliers) {
            // |lambda| far from 1 can never resonate (and big powers overflow)
            if (std::abs(std::abs(l) - 1.0) > 0.1) continue;
            cplx p{1.0, 0.0};
            for (int i = 0; i < j; ++i) p *= l;
            if (std::abs(p - cplx{1.0, 0.0}) < tol_res) return j - 1;
        }
    }
    return n_max;
}

std::vector<PeriodicOrbit> find_periodic_points(const SmoothSymplecticMap& map, int n,
                                                int grid_res,
                                                const PeriodicSearchOptions& opts) {
    if (n < 1) throw precondition_error("find_periodic_points: n >= 1 required");
    if (grid_res < 1) throw precondition_error("find_periodic_points: grid_res >= 1 required");
    const Domain dom = map.domain();
    Vec2 lo, hi;
    map.sample_box(lo, hi);

    auto scan_rows = [&](int row_begin, int row_end) {
        std::vector<Root> roots;
        for (int i = row_begin; i < row_end; ++i) {
            for (int j = 0; j < grid_res; ++j) {
                const Vec2 seed{lo.x + (hi.x - lo.x) * (i + 0.5) / grid_res,
                                lo.y + (hi.y - lo.y) * (j + 0.5) / grid_res};
                if (auto root = newton_root(map, seed, n, opts)) roots.push_back(*root);
            }
        }
        return roots;
    };

    std::vector<Root> roots;
    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        roots = scan_rows(0, grid_res);
    } else {
        std::vector<std::future<std::vector<Root>>> parts;
        const int chunk = (grid_res + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int b = t * chunk, e = std::min(grid_res, b + chunk);
            if (b >= e) break;
            parts.push_back(std::async(std::launch::async, scan_rows, b, e));
        }
        for (auto& p : parts) {
            auto part = p.get();  // chunk order: deterministic merge
            roots.insert(roots.end(), part.begin(), part.end());
        }
    }

    // deterministic dedup: sort, then hash-grid sweep at the dedup radius
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        return a.x.x != b.x.x ? a.x.x < b.x.x : a.x.y < b.x.y;
    });
    const double cell = std::max(opts.dedup_radius * 2.0, 1e-9);
    auto cell_key = [cell](const Vec2& p) {
        const long long cx = (long long)std::floor(p.x / cell);
        const long long cy = (long long)std::floor(p.y / cell);
        return (cx << 32) ^ (cy & 0xffffffffLL);
    };
    std::unordered_map<long long, std::vector<int>> grid;
    std::vector<Root> uniq;
    auto find_near = [&](const Vec2& p, double radius) -> int {
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                const Vec2 q{p.x + dx * cell, p.y + dy * cell};
                auto it = grid.find(cell_key(q));
                if (it == grid.end()) continue;
                for (int idx : it->second)
                    if (point_dist(dom, p, uniq[idx].x) < radius) return idx;
            }
        return -1;
    };
    auto insert_all_images = [&](const Vec2& p, int idx) {
        // torus points near the cell seam need mirror entries; cheap fix:
        // register wrapped representatives shifted by the period too
        grid[cell_key(p)].push_back(idx);
        if (dom != Domain::plane) {
            const double period = 1.0;
            for (int dx = -1; dx <= 1; ++dx)
                for (int dy = -1; dy <= 1; ++dy) {
                    if (dx == 0 && dy == 0) continue;
                    if (dom == Domain::sphere_chart && dx != 0) continue;
                    const Vec2 q{p.x + dx * period, p.y + dy * period};
                    grid[cell_key(q)].push_back(idx);
                }
        }
    };
    for (const Root& r : roots) {
        if (find_near(r.x, opts.dedup_radius) >= 0) continue;
        uniq.push_back(r);
        insert_all_images(r.x, int(uniq.size()) - 1);
    }

    // group into orbit classes, find minimal periods
    std::vector<bool> used(uniq.size(), false);
    std::vector<PeriodicOrbit> orbits;
    for (size_t i = 0; i < uniq.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        PeriodicOrbit orb;
        orb.points.push_back(uniq[i].x);
        orb.residual = uniq[i].residual;
        orb.degenerate = uniq[i].degenerate;
        Vec2 p = uniq[i].x;
        int k = 0;
        for (int step = 1; step <= n; ++step) {
            p = map.eval(p);
            if (point_dist(dom, p, uniq[i].x) < 2 * opts.dedup_radius) {
                k = step;
                break;
            }
            orb.points.push_back(p);
            const int j = find_near(p, 2 * opts.dedup_radius);
            if (j >= 0 && !used[j]) {
                used[j] = true;
                orb.residual = std::max(orb.residual, uniq[j].residual);
            }
        }
        if (k == 0 || n % k != 0) continue;  // stray root: minimal period must divide n
        orb.minimal_period = k;
        orb.points.resize(k);
        classify(map, orb, opts);
        if (orb.degenerate) orb.cls = OrbitClass::parabolic;
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

long long count_points(const std::vector<PeriodicOrbit>& orbits, int n) {
    long long total = 0;
    for (const PeriodicOrbit& o : orbits)
        if (n % o.minimal_period == 0) total += o.minimal_period;
    return total;
}

}  // namespace tangle
