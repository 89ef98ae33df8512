#pragma once

#include <stdexcept>

#include "tangle/geom.hpp"
#include "tangle/poly.hpp"

namespace tangle {

/// 3-jet of a planar map germ: f(base + d) = value + (du(d), dv(d)) with
/// du, dv free of constant terms. `order` records how many coefficient
/// degrees are meaningful (1..3); higher ones are zeroed.
struct Jet2 {
    Vec2 base;
    Vec2 value;
    int order = 3;
    Poly2d du, dv;

    Mat2 linear() const {
        return {du.at(1, 0), du.at(0, 1), dv.at(1, 0), dv.at(0, 1)};
    }

    Jet2 truncated(int ord) const {
        Jet2 r = *this;
        r.order = ord;
        r.du = du.truncated(ord);
        r.dv = dv.truncated(ord);
        return r;
    }
};

/// Formal inverse of a jet germ: H with G(H(e)) = e through degree 3.
inline Jet2 invert(const Jet2& j) {
    const Mat2 L = j.linear();
    const Mat2 Li = L.inverse();
    Jet2 r;
    r.base = j.value;
    r.value = j.base;
    r.order = j.order;
    auto lin = [](const Mat2& m) {
        Poly2d pu, pv;
        pu.at(1, 0) = m.a;
        pu.at(0, 1) = m.b;
        pv.at(1, 0) = m.c;
        pv.at(0, 1) = m.d;
        return std::pair{pu, pv};
    };
    auto [h1, h2] = lin(Li);
    const Poly2d id_u = Poly2d::var_u();
    const Poly2d id_v = Poly2d::var_v();
    for (int it = 0; it < 3; ++it) {
        const Poly2d g1 = j.du.compose(h1, h2) - id_u;
        const Poly2d g2 = j.dv.compose(h1, h2) - id_v;
        h1 -= g1 * Li.a + g2 * Li.b;
        h2 -= g1 * Li.c + g2 * Li.d;
    }
    r.du = h1.truncated(j.order);
    r.dv = h2.truncated(j.order);
    r.du.c[0] = 0.0;
    r.dv.c[0] = 0.0;
    return r;
}

/// Chain rule by truncated substitution: jet of (outer o inner) at inner.base.
/// outer must be expanded at inner.value (up to `tol` slack for wrapped
/// coordinates, where germs agree by equivariance).
inline Jet2 compose(const Jet2& outer, const Jet2& inner, double tol = 1e-7) {
    const Vec2 gap = wrap_half(outer.base - inner.value);
    if (norm(gap) > tol)
        throw std::runtime_error("Jet2 compose: basepoint mismatch");
    Jet2 r;
    r.base = inner.base;
    r.value = outer.value;
    r.order = std::min(outer.order, inner.order);
    r.du = outer.du.compose(inner.du, inner.dv).truncated(r.order);
    r.dv = outer.dv.compose(inner.du, inner.dv).truncated(r.order);
    // composition of germs has no constant part
    r.du.c[0] = 0.0;
    r.dv.c[0] = 0.0;
    return r;
}

}  // namespace tangle
