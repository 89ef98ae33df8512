#include "tangle/map.hpp"

namespace tangle {

SymplecticReport check_symplectic(const SmoothSymplecticMap& map, int sample_count,
                                  std::uint64_t seed) {
    if (sample_count < 1) throw precondition_error("check_symplectic: sample_count >= 1");
    rng_t rng(seed);
    Vec2 lo, hi;
    map.sample_box(lo, hi);
    std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y);
    SymplecticReport rep;
    rep.samples = sample_count;
    for (int i = 0; i < sample_count; ++i) {
        const Vec2 x{ux(rng), uy(rng)};
        const double defect = std::abs(map.jacobian(x).det() - 1.0);
        if (defect > rep.max_defect) {
            rep.max_defect = defect;
            rep.worst_point = x;
        }
    }
    return rep;
}

Jet2 InvertedMap::jet(Vec2 x, int order) const {
    const Vec2 y = m_->eval_inverse(x);
    Jet2 j = invert(m_->jet(y, order));
    // anchor at the requested representative
    j.base = x;
    j.value = m_->lift_inverse(x);
    return j;
}

Mat2 InvertedMap::homotopy() const { return m_->homotopy().inverse(); }

params_t ComposedMap::parameters() const {
    params_t p;
    for (const auto& [k, v] : f_->parameters()) p["outer." + k] = v;
    for (const auto& [k, v] : h_->parameters()) p["inner." + k] = v;
    return p;
}

Jet2 ComposedMap::jet(Vec2 x, int order) const {
    const Jet2 inner = h_->jet(x, order);
    const Jet2 outer = f_->jet(f_->wrap(inner.value), order);
    Jet2 j = compose(outer, inner);
    j.value = lift(x);
    return j;
}

Vec2 IteratedMap::eval(Vec2 x) const {
    for (int i = 0; i < k_; ++i) x = m_->eval(x);
    return x;
}

Vec2 IteratedMap::eval_inverse(Vec2 x) const {
    for (int i = 0; i < k_; ++i) x = m_->eval_inverse(x);
    return x;
}

Vec2 IteratedMap::lift(Vec2 X) const {
    for (int i = 0; i < k_; ++i) X = m_->lift(X);
    return X;
}

Vec2 IteratedMap::lift_inverse(Vec2 X) const {
    for (int i = 0; i < k_; ++i) X = m_->lift_inverse(X);
    return X;
}

Jet2 IteratedMap::jet(Vec2 x, int order) const {
    Jet2 acc = m_->jet(x, order);
    Vec2 p = m_->wrap(acc.value);
    for (int i = 1; i < k_; ++i) {
        const Jet2 next = m_->jet(p, order);
        acc = compose(next, acc);
        p = m_->wrap(next.value);
        acc.value = next.value;
    }
    acc.value = lift(x);
    return acc;
}

Mat2 IteratedMap::homotopy() const {
    Mat2 A = Mat2::identity();
    const Mat2 B = m_->homotopy();
    for (int i = 0; i < k_; ++i) A = B * A;
    return A;
}

}  // namespace tangle
