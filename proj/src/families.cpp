#include "tangle/families.hpp"

#include <cmath>
#include <sstream>

namespace tangle {

namespace {

/// Package the result of evaluating a lift formula on Series seeds.
template <class F>
Jet2 make_jet(F&& apply, Vec2 x, int order) {
    Series sx = Series::var_u(x.x);
    Series sy = Series::var_v(x.y);
    Series ox, oy;
    apply(sx, sy, ox, oy);
    Jet2 j;
    j.base = x;
    j.value = {ox.c[0], oy.c[0]};
    j.du = ox;
    j.dv = oy;
    j.du.c[0] = 0.0;
    j.dv.c[0] = 0.0;
    return j.truncated(order);
}

double get_param(const params_t& p, const std::string& key, double dflt) {
    auto it = p.find(key);
    if (it == p.end()) return dflt;
    if (!std::isfinite(it->second))
        throw invalid_map_error("non-finite parameter: " + key);
    return it->second;
}

void reject_unknown(const params_t& p, std::initializer_list<const char*> allowed,
                    const std::string& family) {
    for (const auto& [k, v] : p) {
        bool ok = false;
        for (const char* a : allowed)
            if (k == a) ok = true;
        if (!ok)
            throw invalid_map_error("unknown parameter '" + k + "' for family '" + family + "'");
        (void)v;
    }
}

}  // namespace

// ---------------------------------------------------------------- toral

ToralAutomorphism::ToralAutomorphism(Mat2i A) : A_(A), Ainv_(A.inverse_unimodular()) {}

params_t ToralAutomorphism::parameters() const {
    return {{"a11", double(A_.a)}, {"a12", double(A_.b)}, {"a21", double(A_.c)}, {"a22", double(A_.d)}};
}

Jet2 ToralAutomorphism::jet(Vec2 x, int order) const {
    require_order(order);
    Jet2 j;
    j.base = x;
    j.value = lift(x);
    j.order = order;
    const Mat2 A = A_.real();
    j.du.at(1, 0) = A.a;
    j.du.at(0, 1) = A.b;
    j.dv.at(1, 0) = A.c;
    j.dv.at(0, 1) = A.d;
    return j;
}

// ---------------------------------------------------------------- standard

StandardMap::StandardMap(double K) : K_(K) { require_finite(K, "K"); }

namespace {
template <class S>
void standard_apply(double K, const S& x, const S& y, S& ox, S& oy) {
    using std::sin;
    oy = y - sin(x * kTwoPi) * (K / kTwoPi);
    ox = x + oy;
}
}  // namespace

Vec2 StandardMap::lift(Vec2 X) const {
    double ox, oy;
    standard_apply(K_, X.x, X.y, ox, oy);
    return {ox, oy};
}

Vec2 StandardMap::lift_inverse(Vec2 X) const {
    const double x = X.x - X.y;
    const double y = X.y + std::sin(kTwoPi * x) * (K_ / kTwoPi);
    return {x, y};
}

Jet2 StandardMap::jet(Vec2 x, int order) const {
    require_order(order);
    return make_jet([this](const Series& u, const Series& v, Series& ou, Series& ov) {
        standard_apply(K_, u, v, ou, ov);
    }, x, order);
}

// ---------------------------------------------------------------- two-harmonic

TwoHarmonicMap::TwoHarmonicMap(double K1, double K2, double phase)
    : K1_(K1), K2_(K2), phase_(phase) {
    require_finite(K1, "K1");
    require_finite(K2, "K2");
    require_finite(phase, "phase");
}

namespace {
template <class S>
void two_harmonic_apply(double K1, double K2, double phase, const S& x, const S& y, S& ox, S& oy) {
    using std::sin;
    oy = y - sin(x * kTwoPi) * (K1 / kTwoPi) - sin(x * (2.0 * kTwoPi) + phase) * (K2 / (2.0 * kTwoPi));
    ox = x + oy;
}
}  // namespace

Vec2 TwoHarmonicMap::lift(Vec2 X) const {
    double ox, oy;
    two_harmonic_apply(K1_, K2_, phase_, X.x, X.y, ox, oy);
    return {ox, oy};
}

Vec2 TwoHarmonicMap::lift_inverse(Vec2 X) const {
    const double x = X.x - X.y;
    const double y = X.y + std::sin(kTwoPi * x) * (K1_ / kTwoPi) +
                     std::sin(2.0 * kTwoPi * x + phase_) * (K2_ / (2.0 * kTwoPi));
    return {x, y};
}

Jet2 TwoHarmonicMap::jet(Vec2 x, int order) const {
    require_order(order);
    return make_jet([this](const Series& u, const Series& v, Series& ou, Series& ov) {
        two_harmonic_apply(K1_, K2_, phase_, u, v, ou, ov);
    }, x, order);
}

// ---------------------------------------------------------------- sphere rotation

SphereRotation::SphereRotation(double alpha, double eps) : alpha_(alpha), eps_(eps) {
    require_finite(alpha, "alpha");
    require_finite(eps, "eps");
    if (eps == 0.0) throw invalid_map_error("sphere-rotation: eps must be nonzero");
}

namespace {
template <class S>
void sphere_apply(double alpha, double eps, const S& z, const S& th, S& oz, S& oth) {
    using std::sin;
    oth = th + (z * eps + alpha);
    oz = z + sin(oth * kTwoPi) * (eps / kTwoPi);
}
}  // namespace

Vec2 SphereRotation::lift(Vec2 X) const {
    double oz, oth;
    sphere_apply(alpha_, eps_, X.x, X.y, oz, oth);
    return {oz, oth};
}

Vec2 SphereRotation::lift_inverse(Vec2 X) const {
    const double z = X.x - std::sin(kTwoPi * X.y) * (eps_ / kTwoPi);
    const double th = X.y - alpha_ - eps_ * z;
    return {z, th};
}

Jet2 SphereRotation::jet(Vec2 x, int order) const {
    require_order(order);
    return make_jet([this](const Series& u, const Series& v, Series& ou, Series& ov) {
        sphere_apply(alpha_, eps_, u, v, ou, ov);
    }, x, order);
}

// ---------------------------------------------------------------- model twist

ModelTwist::ModelTwist(double theta, double c) : theta_(theta), c_(c) {
    require_finite(theta, "theta");
    require_finite(c, "c");
}

namespace {
template <class S>
void twist_apply(double theta, double c, const S& x, const S& y, S& ox, S& oy) {
    using std::sin;
    using std::cos;
    const S phase = (x * x + y * y) * c + theta;
    const S cp = cos(phase);
    const S sp = sin(phase);
    ox = x * cp - y * sp;
    oy = x * sp + y * cp;
}
}  // namespace

Vec2 ModelTwist::lift(Vec2 X) const {
    double ox, oy;
    twist_apply(theta_, c_, X.x, X.y, ox, oy);
    return {ox, oy};
}

Vec2 ModelTwist::lift_inverse(Vec2 X) const {
    // |z| is invariant, so the rotation angle is known from the image
    const double phase = theta_ + c_ * norm2(X);
    const double cp = std::cos(phase), sp = std::sin(phase);
    return {X.x * cp + X.y * sp, -X.x * sp + X.y * cp};
}

Jet2 ModelTwist::jet(Vec2 x, int order) const {
    require_order(order);
    return make_jet([this](const Series& u, const Series& v, Series& ou, Series& ov) {
        twist_apply(theta_, c_, u, v, ou, ov);
    }, x, order);
}

// ---------------------------------------------------------------- ham-bump flow

HamiltonianBumpFlow::HamiltonianBumpFlow(Vec2 center, double radius, double amplitude, double step)
    : center_(center), radius_(radius), amplitude_(amplitude), step_(step) {
    require_finite(center.x, "cx");
    require_finite(center.y, "cy");
    require_finite(radius, "radius");
    require_finite(amplitude, "amplitude");
    require_finite(step, "step");
    if (radius <= 0.0) throw invalid_map_error("ham-bump: radius must be positive");
    if (step <= 0.0 || step > 0.5) throw invalid_map_error("ham-bump: step must be in (0, 0.5]");
}

namespace {
template <class S>
void bump_field(const PlateauBump& B, Vec2 c, double rs2, double A, const S& x, const S& y,
                S& fx, S& fy) {
    const S dx = x - S::constant(c.x);
    const S dy = y - S::constant(c.y);
    const S u = (dx * dx + dy * dy) * (1.0 / rs2);
    const S g = B.deriv(u) * (2.0 * A / rs2);
    // Hamiltonian vector field (dH/dy, -dH/dx)
    fx = g * dy;
    fy = -(g * dx);
}

inline void bump_field(const PlateauBump& B, Vec2 c, double rs2, double A, const double& x,
                       const double& y, double& fx, double& fy) {
    const double dx = x - c.x;
    const double dy = y - c.y;
    const double u = (dx * dx + dy * dy) / rs2;
    const double g = B.deriv(u) * (2.0 * A / rs2);
    fx = g * dy;
    fy = -g * dx;
}

template <class S>
void rk4_time1(const PlateauBump& B, Vec2 c, double rs2, double A, double h, S& x, S& y) {
    const int n = std::max(1, int(std::lround(1.0 / h)));
    const double dt = 1.0 / n;
    S k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y;
    for (int i = 0; i < n; ++i) {
        bump_field(B, c, rs2, A, x, y, k1x, k1y);
        bump_field(B, c, rs2, A, x + k1x * (dt / 2), y + k1y * (dt / 2), k2x, k2y);
        bump_field(B, c, rs2, A, x + k2x * (dt / 2), y + k2y * (dt / 2), k3x, k3y);
        bump_field(B, c, rs2, A, x + k3x * dt, y + k3y * dt, k4x, k4y);
        x = x + (k1x + k2x * 2.0 + k3x * 2.0 + k4x) * (dt / 6.0);
        y = y + (k1y + k2y * 2.0 + k3y * 2.0 + k4y) * (dt / 6.0);
    }
}
}  // namespace

params_t HamiltonianBumpFlow::parameters() const {
    return {{"cx", center_.x}, {"cy", center_.y}, {"radius", radius_},
            {"amplitude", amplitude_}, {"step", step_}};
}

Vec2 HamiltonianBumpFlow::lift(Vec2 X) const {
    double x = X.x, y = X.y;
    rk4_time1(profile_, center_, radius_ * radius_, amplitude_, step_, x, y);
    return {x, y};
}

Vec2 HamiltonianBumpFlow::lift_inverse(Vec2 X) const {
    // backward RK4 gives a good initial guess; Newton polish on the forward map
    double x = X.x, y = X.y;
    rk4_time1(profile_, center_, radius_ * radius_, -amplitude_, step_, x, y);
    Vec2 g{x, y};
    for (int it = 0; it < 8; ++it) {
        const Jet2 j = jet(g, 1);
        const Vec2 r = j.value - X;
        if (norm(r) < 1e-14) break;
        g -= j.linear().inverse() * r;
    }
    return g;
}

Jet2 HamiltonianBumpFlow::jet(Vec2 x, int order) const {
    require_order(order);
    return make_jet([this](const Series& u, const Series& v, Series& ou, Series& ov) {
        ou = u;
        ov = v;
        rk4_time1(profile_, center_, radius_ * radius_, amplitude_, step_, ou, ov);
    }, x, order);
}

// ---------------------------------------------------------------- translation

TorusTranslation::TorusTranslation(double rho1, double rho2) : r1_(rho1), r2_(rho2) {
    require_finite(rho1, "rho1");
    require_finite(rho2, "rho2");
}

Jet2 TorusTranslation::jet(Vec2 x, int order) const {
    require_order(order);
    Jet2 j;
    j.base = x;
    j.value = lift(x);
    j.order = order;
    j.du.at(1, 0) = 1.0;
    j.dv.at(0, 1) = 1.0;
    return j;
}

// ---------------------------------------------------------------- factory

map_ptr make_map(const std::string& family, const params_t& params) {
    if (family == "cat") {
        reject_unknown(params, {}, family);
        return std::make_shared<ToralAutomorphism>(Mat2i{2, 1, 1, 1});
    }
    if (family == "toral") {
        reject_unknown(params, {"a11", "a12", "a21", "a22"}, family);
        Mat2i A{(long long)get_param(params, "a11", 2), (long long)get_param(params, "a12", 1),
                (long long)get_param(params, "a21", 1), (long long)get_param(params, "a22", 1)};
        return std::make_shared<ToralAutomorphism>(A);
    }
    if (family == "standard") {
        reject_unknown(params, {"K"}, family);
        return std::make_shared<StandardMap>(get_param(params, "K", 1.2));
    }
    if (family == "two-harmonic") {
        reject_unknown(params, {"K1", "K2", "phase"}, family);
        return std::make_shared<TwoHarmonicMap>(get_param(params, "K1", 1.0),
                                                get_param(params, "K2", 0.3),
                                                get_param(params, "phase", 0.4));
    }
    if (family == "sphere-rotation") {
        reject_unknown(params, {"alpha", "eps"}, family);
        return std::make_shared<SphereRotation>(get_param(params, "alpha", 0.05),
                                                get_param(params, "eps", 0.3));
    }
    if (family == "model-twist") {
        reject_unknown(params, {"theta", "c"}, family);
        return std::make_shared<ModelTwist>(get_param(params, "theta", 2.0),
                                            get_param(params, "c", 0.1));
    }
    if (family == "ham-bump") {
        reject_unknown(params, {"cx", "cy", "radius", "amplitude", "step"}, family);
        return std::make_shared<HamiltonianBumpFlow>(
            Vec2{get_param(params, "cx", 0.0), get_param(params, "cy", 0.0)},
            get_param(params, "radius", 0.5), get_param(params, "amplitude", 0.05),
            get_param(params, "step", 1e-3));
    }
    if (family == "translation") {
        reject_unknown(params, {"rho1", "rho2"}, family);
        return std::make_shared<TorusTranslation>(get_param(params, "rho1", 0.0),
                                                  get_param(params, "rho2", 0.0));
    }
    if (family == "identity") {
        reject_unknown(params, {}, family);
        return std::make_shared<TorusTranslation>(0.0, 0.0);
    }
    throw invalid_map_error("unknown map family: " + family);
}

std::vector<FamilyDoc> family_docs() {
    return {
        {"cat", "Arnold cat map [[2,1],[1,1]] on T^2", {}},
        {"toral", "linear toral automorphism x -> A x (mod 1), A unimodular",
         {{"a11", "matrix entry (default 2)"}, {"a12", "matrix entry (default 1)"},
          {"a21", "matrix entry (default 1)"}, {"a22", "matrix entry (default 1)"}}},
        {"standard", "Chirikov standard map x'=x+y', y'=y-(K/2pi)sin(2pi x)",
         {{"K", "kick strength (default 1.2)"}}},
        {"two-harmonic", "standard map with a phase-shifted second harmonic",
         {{"K1", "first harmonic (default 1.0)"}, {"K2", "second harmonic (default 0.3)"},
          {"phase", "second-harmonic phase (default 0.4)"}}},
        {"sphere-rotation", "perturbed rotation in sphere cylinder coordinates (z, theta)",
         {{"alpha", "rotation offset (default 0.05)"}, {"eps", "perturbation (default 0.3)"}}},
        {"model-twist", "z -> e^{i theta} z e^{i c |z|^2} on the plane",
         {{"theta", "rotation angle in radians (default 2.0)"}, {"c", "twist (default 0.1)"}}},
        {"ham-bump", "time-1 RK4 flow of a compactly supported Hamiltonian bump",
         {{"cx", "center x (default 0)"}, {"cy", "center y (default 0)"},
          {"radius", "support radius (default 0.5)"}, {"amplitude", "bump height (default 0.05)"},
          {"step", "RK4 step (default 1e-3)"}}},
        {"translation", "rigid translation on T^2",
         {{"rho1", "shift x (default 0)"}, {"rho2", "shift y (default 0)"}}},
        {"identity", "identity map on T^2", {}},
    };
}

}  // namespace tangle
