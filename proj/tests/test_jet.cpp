#include <doctest.h>

#include "helpers.hpp"
#include "tangle/families.hpp"

using namespace tangle;
using namespace tangle::testing;

TEST_CASE("poly: truncated product and composition basics") {
    Poly2d p = Poly2d::var_u();     // u
    Poly2d q = Poly2d::var_v();     // v
    Poly2d r = (p + q) * (p + q);   // (u+v)^2
    CHECK(r.at(2, 0) == doctest::Approx(1.0));
    CHECK(r.at(1, 1) == doctest::Approx(2.0));
    CHECK(r.at(0, 2) == doctest::Approx(1.0));

    // degree-4 terms are dropped
    Poly2d s = r * r;
    CHECK(s.max_abs() == doctest::Approx(0.0));

    // substitution with constant terms
    Poly2d lin = Poly2d::var_u(0.5);  // 0.5 + u
    Poly2d comp = r.compose(lin, Poly2d::constant(0.0));
    CHECK(comp.c[0] == doctest::Approx(0.25));
    CHECK(comp.at(1, 0) == doctest::Approx(1.0));
    CHECK(comp.at(2, 0) == doctest::Approx(1.0));
}

TEST_CASE("series: sin/cos/exp agree with analytic derivatives") {
    const double a = 0.37, b = -0.81;
    Series x = Series::var_u(a);
    Series y = Series::var_v(b);
    Series f = sin(x * 2.0 + y * y);
    // f(u,v) = sin(2(a+u) + (b+v)^2)
    const double arg = 2 * a + b * b;
    CHECK(f.c[0] == doctest::Approx(std::sin(arg)).epsilon(1e-14));
    CHECK(f.at(1, 0) == doctest::Approx(2 * std::cos(arg)).epsilon(1e-14));
    CHECK(f.at(0, 1) == doctest::Approx(2 * b * std::cos(arg)).epsilon(1e-14));
    CHECK(f.at(0, 2) == doctest::Approx(std::cos(arg) - 2 * b * b * std::sin(arg)).epsilon(1e-12));
}

TEST_CASE("jet: cat map is exactly linear at any basepoint") {
    ToralAutomorphism cat({2, 1, 1, 1});
    const Jet2 j = cat.jet({0.37, 0.25}, 3);
    CHECK(j.linear().a == doctest::Approx(2.0));
    CHECK(j.linear().b == doctest::Approx(1.0));
    CHECK(j.linear().c == doctest::Approx(1.0));
    CHECK(j.linear().d == doctest::Approx(1.0));
    Poly2d nl_u = j.du.truncated(3) - j.du.truncated(1);
    Poly2d nl_v = j.dv.truncated(3) - j.dv.truncated(1);
    CHECK(nl_u.max_abs() == 0.0);
    CHECK(nl_v.max_abs() == 0.0);
}

TEST_CASE("jet: model twist cubic coefficients at the origin") {
    // z e^{i c|z|^2} with theta = 0 expands as
    //   x' = x - c y (x^2+y^2), y' = y + c x (x^2+y^2) + O(5)
    const double c = 0.8;
    ModelTwist tw(0.0, c);
    const Jet2 j = tw.jet({0, 0}, 3);
    CHECK(j.du.at(1, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(j.du.at(2, 1) == doctest::Approx(-c).epsilon(1e-13));
    CHECK(j.du.at(0, 3) == doctest::Approx(-c).epsilon(1e-13));
    CHECK(j.dv.at(3, 0) == doctest::Approx(c).epsilon(1e-13));
    CHECK(j.dv.at(1, 2) == doctest::Approx(c).epsilon(1e-13));
    // remaining cubic slots vanish
    CHECK(j.du.at(3, 0) == doctest::Approx(0.0));
    CHECK(j.du.at(1, 2) == doctest::Approx(0.0));
    CHECK(j.dv.at(2, 1) == doctest::Approx(0.0));
    CHECK(j.dv.at(0, 3) == doctest::Approx(0.0));
    // quadratic part vanishes identically
    CHECK((j.du.truncated(2) - j.du.truncated(1)).max_abs() == doctest::Approx(0.0));
}

TEST_CASE("jet: analytic jets match finite differences at step 1e-3") {
    StandardMap sm(0.9);
    ModelTwist tw(1.1, 0.4);
    SphereRotation sp(0.05, 0.3);
    rng_t rng(7);
    std::uniform_real_distribution<double> u(0.1, 0.6);
    for (const SmoothSymplecticMap* m :
         std::initializer_list<const SmoothSymplecticMap*>{&sm, &tw, &sp}) {
        for (int i = 0; i < 5; ++i) {
            const Vec2 x{u(rng), u(rng)};
            // FD truncation at step 1e-3 is O(h^2) ~ 1e-4 for these families
            const double err = jet_distance(m->jet(x, 3), fd_jet(*m, x));
            CHECK(err < 2e-4);
        }
    }
}

TEST_CASE("jet: chain rule -- jet of f o f equals composition of jets") {
    StandardMap sm(1.3);
    rng_t rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const Vec2 x{u(rng), u(rng)};
        const Jet2 inner = sm.jet(x, 3);
        const Jet2 outer = sm.jet(wrap01(inner.value), 3);
        const Jet2 composed = compose(outer, inner);
        IteratedMap f2(std::make_shared<StandardMap>(1.3), 2);
        CHECK(jet_distance(composed, f2.jet(x, 3)) < 1e-8);
    }
}

TEST_CASE("jet: composition is associative on samples") {
    StandardMap sm(0.7);
    const Vec2 x{0.21, 0.43};
    const Jet2 j1 = sm.jet(x, 3);
    const Jet2 j2 = sm.jet(wrap01(j1.value), 3);
    const Jet2 j3 = sm.jet(wrap01(j2.value), 3);
    const Jet2 left = compose(j3, compose(j2, j1));
    const Jet2 right = compose(compose(j3, j2), j1);
    CHECK(jet_distance(left, right) < 1e-12);
}

TEST_CASE("jet: formal inverse matches the inverse map's jet") {
    StandardMap sm(1.1);
    const Vec2 x{0.3, 0.15};
    const Jet2 j = sm.jet(x, 3);
    const Jet2 ji = invert(j);
    InvertedMap inv(std::make_shared<StandardMap>(1.1));
    const Jet2 direct = inv.jet(wrap01(j.value), 3);
    CHECK(jet_distance(ji, direct) < 1e-10);
    // round trip: inverse o jet = identity germ
    const Jet2 round = compose(ji, j);
    CHECK(round.du.at(1, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(round.dv.at(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
    Poly2d res_u = round.du;
    res_u.at(1, 0) -= 1.0;
    Poly2d res_v = round.dv;
    res_v.at(0, 1) -= 1.0;
    CHECK(res_u.max_abs() < 1e-12);
    CHECK(res_v.max_abs() < 1e-12);
}
