#pragma once

#include <map>
#include <memory>
#include <string>

#include "tangle/geom.hpp"
#include "tangle/jet.hpp"

namespace tangle {

enum class Domain { plane, torus, sphere_chart };

inline const char* domain_name(Domain d) {
    switch (d) {
        case Domain::plane: return "plane";
        case Domain::torus: return "torus";
        case Domain::sphere_chart: return "sphere-cylinder-chart";
    }
    return "?";
}

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Violated operation precondition (caller's fault): distinct CLI exit code.
struct precondition_error : error {
    using error::error;
};
struct invalid_map_error : precondition_error {
    using precondition_error::precondition_error;
};
struct unsupported_order_error : precondition_error {
    using precondition_error::precondition_error;
};
struct classification_error : precondition_error {
    using precondition_error::precondition_error;
};
struct resonance_error : precondition_error {
    using precondition_error::precondition_error;
};
struct insufficient_data_error : error {
    using error::error;
};
struct amplitude_error : precondition_error {
    using precondition_error::precondition_error;
};
struct geometry_error : error {
    using error::error;
};

using params_t = std::map<std::string, double>;

/// An evaluable area-preserving map on a plane, torus, or sphere chart.
/// Immutable after construction; all member functions are pure.
///
/// Conventions:
///  - eval/eval_inverse wrap periodic coordinates into [0,1),
///  - lift/lift_inverse act on the universal cover (no wrapping) and satisfy
///    lift(X + m) = lift(X) + A m with A = homotopy() on the torus,
///  - jet(x, order) is the truncated Taylor expansion of the lift at x, so it
///    is wrap-independent.
class SmoothSymplecticMap {
public:
    virtual ~SmoothSymplecticMap() = default;

    virtual std::string name() const = 0;
    virtual Domain domain() const = 0;
    virtual params_t parameters() const = 0;

    virtual Vec2 eval(Vec2 x) const = 0;
    virtual Vec2 eval_inverse(Vec2 x) const = 0;
    virtual Vec2 lift(Vec2 X) const = 0;
    virtual Vec2 lift_inverse(Vec2 X) const = 0;
    virtual Jet2 jet(Vec2 x, int order) const = 0;

    /// Linear part of the lift on H_1 (torus); identity elsewhere.
    virtual Mat2 homotopy() const { return Mat2::identity(); }

    /// Box used for random sampling in checks.
    virtual void sample_box(Vec2& lo, Vec2& hi) const {
        switch (domain()) {
            case Domain::torus: lo = {0, 0}; hi = {1, 1}; break;
            case Domain::sphere_chart: lo = {-0.95, 0.0}; hi = {0.95, 1.0}; break;
            case Domain::plane: lo = {-1, -1}; hi = {1, 1}; break;
        }
    }

    Vec2 wrap(Vec2 p) const {
        switch (domain()) {
            case Domain::torus: return wrap01(p);
            case Domain::sphere_chart: return {p.x, wrap01(p.y)};
            case Domain::plane: return p;
        }
        return p;
    }

    Mat2 jacobian(Vec2 x) const { return jet(x, 1).linear(); }

protected:
    static void require_order(int order) {
        if (order < 1 || order > 3)
            throw unsupported_order_error("jet order must be in 1..3");
    }
    static void require_finite(double v, const char* what) {
        if (!std::isfinite(v)) throw invalid_map_error(std::string("non-finite parameter: ") + what);
    }
};

using map_ptr = std::shared_ptr<const SmoothSymplecticMap>;

struct SymplecticReport {
    double max_defect = 0.0;
    Vec2 worst_point;
    int samples = 0;
    bool pass(double tol) const { return max_defect < tol; }
};

/// Max over random samples of |det Df - 1|.
SymplecticReport check_symplectic(const SmoothSymplecticMap& map, int sample_count,
                                  std::uint64_t seed = 12345);

/// f^-1 as a map object (stable branches grow as unstable branches of this).
class InvertedMap final : public SmoothSymplecticMap {
public:
    explicit InvertedMap(map_ptr m) : m_(std::move(m)) {}

    std::string name() const override { return m_->name() + "-inverse"; }
    Domain domain() const override { return m_->domain(); }
    params_t parameters() const override { return m_->parameters(); }
    Vec2 eval(Vec2 x) const override { return m_->eval_inverse(x); }
    Vec2 eval_inverse(Vec2 x) const override { return m_->eval(x); }
    Vec2 lift(Vec2 X) const override { return m_->lift_inverse(X); }
    Vec2 lift_inverse(Vec2 X) const override { return m_->lift(X); }
    Jet2 jet(Vec2 x, int order) const override;
    Mat2 homotopy() const override;

private:
    map_ptr m_;
};

/// Composition g = f o h (h first).
class ComposedMap final : public SmoothSymplecticMap {
public:
    ComposedMap(map_ptr f, map_ptr h) : f_(std::move(f)), h_(std::move(h)) {}

    std::string name() const override { return f_->name() + "*" + h_->name(); }
    Domain domain() const override { return f_->domain(); }
    params_t parameters() const override;
    Vec2 eval(Vec2 x) const override { return f_->eval(h_->eval(x)); }
    Vec2 eval_inverse(Vec2 x) const override { return h_->eval_inverse(f_->eval_inverse(x)); }
    Vec2 lift(Vec2 X) const override { return f_->lift(h_->lift(X)); }
    Vec2 lift_inverse(Vec2 X) const override { return h_->lift_inverse(f_->lift_inverse(X)); }
    Jet2 jet(Vec2 x, int order) const override;
    Mat2 homotopy() const override { return f_->homotopy() * h_->homotopy(); }

    const map_ptr& outer() const { return f_; }
    const map_ptr& inner() const { return h_; }

private:
    map_ptr f_, h_;
};

/// f^k as a map object.
class IteratedMap final : public SmoothSymplecticMap {
public:
    IteratedMap(map_ptr m, int k) : m_(std::move(m)), k_(k) {
        if (k < 1) throw precondition_error("IteratedMap: k >= 1 required");
    }

    std::string name() const override { return m_->name() + "^" + std::to_string(k_); }
    Domain domain() const override { return m_->domain(); }
    params_t parameters() const override { return m_->parameters(); }
    Vec2 eval(Vec2 x) const override;
    Vec2 eval_inverse(Vec2 x) const override;
    Vec2 lift(Vec2 X) const override;
    Vec2 lift_inverse(Vec2 X) const override;
    Jet2 jet(Vec2 x, int order) const override;
    Mat2 homotopy() const override;

private:
    map_ptr m_;
    int k_;
};

}  // namespace tangle
