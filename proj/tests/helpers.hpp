#pragma once

#include <functional>

#include "tangle/map.hpp"

namespace tangle::testing {

/// Finite-difference 3-jet of a map's lift: the truncation-independent
/// cross-check oracle for the jet-arithmetic path (central stencils, O(h^2)).
inline Jet2 fd_jet(const SmoothSymplecticMap& m, Vec2 x, double h = 1e-3) {
    auto f = [&](double a, double b) { return m.lift({x.x + a, x.y + b}); };
    auto d = [&](auto&& pick) {
        // values on the 5x5 stencil actually used
        auto v = [&](int i, int j) { return pick(f(i * h, j * h)); };
        struct {
            double x1, y1, x2, xy, y2, x3, x2y, xy2, y3;
        } r{};
        r.x1 = (v(1, 0) - v(-1, 0)) / (2 * h);
        r.y1 = (v(0, 1) - v(0, -1)) / (2 * h);
        r.x2 = (v(1, 0) - 2 * v(0, 0) + v(-1, 0)) / (h * h);
        r.y2 = (v(0, 1) - 2 * v(0, 0) + v(0, -1)) / (h * h);
        r.xy = (v(1, 1) - v(1, -1) - v(-1, 1) + v(-1, -1)) / (4 * h * h);
        r.x3 = (v(2, 0) - 2 * v(1, 0) + 2 * v(-1, 0) - v(-2, 0)) / (2 * h * h * h);
        r.y3 = (v(0, 2) - 2 * v(0, 1) + 2 * v(0, -1) - v(0, -2)) / (2 * h * h * h);
        r.x2y = (v(1, 1) - 2 * v(0, 1) + v(-1, 1) - v(1, -1) + 2 * v(0, -1) - v(-1, -1)) /
                (2 * h * h * h);
        r.xy2 = (v(1, 1) - 2 * v(1, 0) + v(1, -1) - v(-1, 1) + 2 * v(-1, 0) - v(-1, -1)) /
                (2 * h * h * h);
        return r;
    };
    auto fill = [&](Poly2d& p, auto&& pick) {
        auto r = d(pick);
        p.at(1, 0) = r.x1;
        p.at(0, 1) = r.y1;
        p.at(2, 0) = r.x2 / 2;
        p.at(1, 1) = r.xy;
        p.at(0, 2) = r.y2 / 2;
        p.at(3, 0) = r.x3 / 6;
        p.at(2, 1) = r.x2y / 2;
        p.at(1, 2) = r.xy2 / 2;
        p.at(0, 3) = r.y3 / 6;
    };
    Jet2 j;
    j.base = x;
    j.value = m.lift(x);
    j.order = 3;
    fill(j.du, [](Vec2 v) { return v.x; });
    fill(j.dv, [](Vec2 v) { return v.y; });
    return j;
}

/// h^-1 o f o h for a linear symplectic h (det 1): conjugation test wrapper.
class LinearConjugateMap final : public SmoothSymplecticMap {
public:
    LinearConjugateMap(map_ptr f, Mat2 h) : f_(std::move(f)), h_(h), hi_(h.inverse()) {
        if (f_->domain() != Domain::plane)
            throw precondition_error("LinearConjugateMap: plane maps only");
    }
    std::string name() const override { return f_->name() + "-conj"; }
    Domain domain() const override { return Domain::plane; }
    params_t parameters() const override { return f_->parameters(); }
    Vec2 eval(Vec2 x) const override { return hi_ * f_->eval(h_ * x); }
    Vec2 eval_inverse(Vec2 x) const override { return hi_ * f_->eval_inverse(h_ * x); }
    Vec2 lift(Vec2 X) const override { return eval(X); }
    Vec2 lift_inverse(Vec2 X) const override { return eval_inverse(X); }
    Jet2 jet(Vec2 x, int order) const override {
        Jet2 inner = f_->jet(h_ * x, order);
        Jet2 j;
        j.base = x;
        j.value = hi_ * inner.value;
        j.order = order;
        Poly2d px, py;  // coordinates of h as degree-1 polys
        px.at(1, 0) = h_.a;
        px.at(0, 1) = h_.b;
        py.at(1, 0) = h_.c;
        py.at(0, 1) = h_.d;
        const Poly2d gu = inner.du.compose(px, py);
        const Poly2d gv = inner.dv.compose(px, py);
        j.du = gu * hi_.a + gv * hi_.b;
        j.dv = gu * hi_.c + gv * hi_.d;
        return j.truncated(order);
    }

private:
    map_ptr f_;
    Mat2 h_, hi_;
};

/// Translate the coordinate chart of a torus map: x -> f(x + t) - t.
class TranslatedMap final : public SmoothSymplecticMap {
public:
    TranslatedMap(map_ptr f, Vec2 t) : f_(std::move(f)), t_(t) {}
    std::string name() const override { return f_->name() + "-shift"; }
    Domain domain() const override { return f_->domain(); }
    params_t parameters() const override { return f_->parameters(); }
    Vec2 eval(Vec2 x) const override { return wrap(lift(x)); }
    Vec2 eval_inverse(Vec2 x) const override { return wrap(lift_inverse(x)); }
    Vec2 lift(Vec2 X) const override { return f_->lift(X + t_) - (f_->homotopy() * t_); }
    Vec2 lift_inverse(Vec2 X) const override {
        return f_->lift_inverse(X + f_->homotopy() * t_) - t_;
    }
    Jet2 jet(Vec2 x, int order) const override {
        Jet2 j = f_->jet(f_->wrap(x + t_), order);
        j.base = x;
        j.value = lift(x);
        return j;
    }
    Mat2 homotopy() const override { return f_->homotopy(); }

private:
    map_ptr f_;
    Vec2 t_;
};

inline double jet_distance(const Jet2& a, const Jet2& b) {
    double m = 0.0;
    for (int k = 0; k < Poly2d::kTerms; ++k) {
        m = std::max(m, std::abs(a.du.c[k] - b.du.c[k]));
        m = std::max(m, std::abs(a.dv.c[k] - b.dv.c[k]));
    }
    return m;
}

/// Random SL(2,R) matrix as a product of shears and a rotation.
inline Mat2 random_sl2(rng_t& rng, double scale = 0.6) {
    std::uniform_real_distribution<double> u(-scale, scale);
    const Mat2 s1{1.0, u(rng), 0.0, 1.0};
    const Mat2 s2{1.0, 0.0, u(rng), 1.0};
    const double th = u(rng) * 3.0;
    const Mat2 rot{std::cos(th), -std::sin(th), std::sin(th), std::cos(th)};
    return s1 * s2 * rot;
}

}  // namespace tangle::testing
