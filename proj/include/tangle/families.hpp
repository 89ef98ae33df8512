#pragma once

#include <vector>

#include "tangle/bump.hpp"
#include "tangle/map.hpp"

namespace tangle {

/// Integer 2x2 matrix (torus homotopy data).
struct Mat2i {
    long long a = 1, b = 0, c = 0, d = 1;
    long long det() const { return a * d - b * c; }
    long long trace() const { return a + d; }
    Mat2 real() const { return Mat2{double(a), double(b), double(c), double(d)}; }
    Mat2i inverse_unimodular() const {
        const long long dt = det();
        if (dt != 1 && dt != -1) throw invalid_map_error("toral matrix must be unimodular");
        return {d * dt, -b * dt, -c * dt, a * dt};
    }
};

/// Linear toral automorphism x -> A x (mod 1), A in SL(2,Z).
class ToralAutomorphism final : public SmoothSymplecticMap {
public:
    explicit ToralAutomorphism(Mat2i A);

    std::string name() const override { return "toral"; }
    Domain domain() const override { return Domain::torus; }
    params_t parameters() const override;
    Vec2 eval(Vec2 x) const override { return wrap01(lift(x)); }
    Vec2 eval_inverse(Vec2 x) const override { return wrap01(lift_inverse(x)); }
    Vec2 lift(Vec2 X) const override { return A_.real() * X; }
    Vec2 lift_inverse(Vec2 X) const override { return Ainv_.real() * X; }
    Jet2 jet(Vec2 x, int order) const override;
    Mat2 homotopy() const override { return A_.real(); }

    const Mat2i& matrix() const { return A_; }

private:
    Mat2i A_, Ainv_;
};

/// Chirikov standard map on T^2:
///   x' = x + y',  y' = y - (K/2pi) sin(2pi x).
/// The origin is elliptic (trace 2-K) and (1/2, 0) hyperbolic (trace 2+K)
/// for 0 < K < 4.
class StandardMap final : public SmoothSymplecticMap {
public:
    explicit StandardMap(double K);

    std::string name() const override { return "standard"; }
    Domain domain() const override { return Domain::torus; }
    params_t parameters() const override { return {{"K", K_}}; }
    Vec2 eval(Vec2 x) const override { return wrap01(lift(x)); }
    Vec2 eval_inverse(Vec2 x) const override { return wrap01(lift_inverse(x)); }
    Vec2 lift(Vec2 X) const override;
    Vec2 lift_inverse(Vec2 X) const override;
    Jet2 jet(Vec2 x, int order) const override;
    Mat2 homotopy() const override { return {1, 1, 0, 1}; }

private:
    double K_;
};

/// Standard map with a second harmonic in the kick, to break the accidental
/// reversibility symmetries of the one-harmonic family:
///   x' = x + y',  y' = y - (K1/2pi) sin(2pi x) - (K2/4pi) sin(4pi x + phase).
class TwoHarmonicMap final : public SmoothSymplecticMap {
public:
    TwoHarmonicMap(double K1, double K2, double phase);

    std::string name() const override { return "two-harmonic"; }
    Domain domain() const override { return Domain::torus; }
    params_t parameters() const override {
        return {{"K1", K1_}, {"K2", K2_}, {"phase", phase_}};
    }
    Vec2 eval(Vec2 x) const override { return wrap01(lift(x)); }
    Vec2 eval_inverse(Vec2 x) const override { return wrap01(lift_inverse(x)); }
    Vec2 lift(Vec2 X) const override;
    Vec2 lift_inverse(Vec2 X) const override;
    Jet2 jet(Vec2 x, int order) const override;
    Mat2 homotopy() const override { return {1, 1, 0, 1}; }

private:
    double K1_, K2_, phase_;
};

/// Perturbed rotation of the sphere in cylinder coordinates (z, theta),
/// area form dz ^ dtheta:
///   theta' = theta + alpha + eps * z,
///   z'     = z + (eps/2pi) sin(2pi theta').
/// Composition of two shears, so exactly area-preserving. For alpha = 0 the
/// fixed points sit at z = 0: hyperbolic at theta = 0, elliptic at 1/2.
/// Points are stored as (x, y) = (z, theta); theta wraps mod 1.
class SphereRotation final : public SmoothSymplecticMap {
public:
    SphereRotation(double alpha, double eps);

    std::string name() const override { return "sphere-rotation"; }
    Domain domain() const override { return Domain::sphere_chart; }
    params_t parameters() const override { return {{"alpha", alpha_}, {"eps", eps_}}; }
    Vec2 eval(Vec2 x) const override { return wrap(lift(x)); }
    Vec2 eval_inverse(Vec2 x) const override { return wrap(lift_inverse(x)); }
    Vec2 lift(Vec2 X) const override;
    Vec2 lift_inverse(Vec2 X) const override;
    Jet2 jet(Vec2 x, int order) const override;

    /// Hyperbolic fixed point of the chart (alpha/eps admissible).
    Vec2 hyperbolic_fixed_point() const { return {-alpha_ / eps_, 0.0}; }
    Vec2 elliptic_fixed_point() const { return {-alpha_ / eps_, 0.5}; }

private:
    double alpha_, eps_;
};

/// Model twist z -> e^{i theta} z e^{i c |z|^2} on the plane; the calibration
/// family for the normal form: its first Birkhoff coefficient is c/(2pi).
class ModelTwist final : public SmoothSymplecticMap {
public:
    ModelTwist(double theta, double c);

    std::string name() const override { return "model-twist"; }
    Domain domain() const override { return Domain::plane; }
    params_t parameters() const override { return {{"theta", theta_}, {"c", c_}}; }
    Vec2 eval(Vec2 x) const override { return lift(x); }
    Vec2 eval_inverse(Vec2 x) const override { return lift_inverse(x); }
    Vec2 lift(Vec2 X) const override;
    Vec2 lift_inverse(Vec2 X) const override;
    Jet2 jet(Vec2 x, int order) const override;

private:
    double theta_, c_;
};

/// Time-1 map of the compactly supported Hamiltonian A * B(r^2 / rs^2),
/// integrated with fixed-step classical RK4. The map-core helper family:
/// symplectic only up to the integrator defect (O(h^4) per unit time).
class HamiltonianBumpFlow final : public SmoothSymplecticMap {
public:
    HamiltonianBumpFlow(Vec2 center, double radius, double amplitude, double step);

    std::string name() const override { return "ham-bump"; }
    Domain domain() const override { return Domain::plane; }
    params_t parameters() const override;
    Vec2 eval(Vec2 x) const override { return lift(x); }
    Vec2 eval_inverse(Vec2 x) const override { return lift_inverse(x); }
    Vec2 lift(Vec2 X) const override;
    Vec2 lift_inverse(Vec2 X) const override;  // Newton solve of the forward map
    Jet2 jet(Vec2 x, int order) const override;
    void sample_box(Vec2& lo, Vec2& hi) const override {
        lo = center_ - Vec2{2 * radius_, 2 * radius_};
        hi = center_ + Vec2{2 * radius_, 2 * radius_};
    }

private:
    Vec2 center_;
    double radius_, amplitude_, step_;
    PlateauBump profile_;
};

/// Rigid translation on T^2 (the identity for rho = 0); an isometric fiber.
class TorusTranslation final : public SmoothSymplecticMap {
public:
    TorusTranslation(double rho1, double rho2);

    std::string name() const override { return "translation"; }
    Domain domain() const override { return Domain::torus; }
    params_t parameters() const override { return {{"rho1", r1_}, {"rho2", r2_}}; }
    Vec2 eval(Vec2 x) const override { return wrap01(lift(x)); }
    Vec2 eval_inverse(Vec2 x) const override { return wrap01(lift_inverse(x)); }
    Vec2 lift(Vec2 X) const override { return {X.x + r1_, X.y + r2_}; }
    Vec2 lift_inverse(Vec2 X) const override { return {X.x - r1_, X.y - r2_}; }
    Jet2 jet(Vec2 x, int order) const override;

private:
    double r1_, r2_;
};

/// Construct a built-in family from its registry name and parameter table.
/// Unknown names/parameters and non-finite values are rejected.
map_ptr make_map(const std::string& family, const params_t& params);

struct FamilyDoc {
    std::string name;
    std::string summary;
    std::vector<std::pair<std::string, std::string>> params;  // name, doc (with default)
};
std::vector<FamilyDoc> family_docs();

}  // namespace tangle
