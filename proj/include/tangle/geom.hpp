#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace tangle {

using cplx = std::complex<double>;
using rng_t = std::mt19937_64;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }
inline double norm2(const Vec2& v) { return v.x * v.x + v.y * v.y; }

/// 2x2 real matrix, row-major [[a, b], [c, d]].
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    Mat2() = default;
    Mat2(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 from_columns(const Vec2& c1, const Vec2& c2) {
        return {c1.x, c2.x, c1.y, c2.y};
    }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 operator*(const Mat2& m) const {
        return {a * m.a + b * m.c, a * m.b + b * m.d,
                c * m.a + d * m.c, c * m.b + d * m.d};
    }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator+(const Mat2& m) const { return {a + m.a, b + m.b, c + m.c, d + m.d}; }
    Mat2 operator-(const Mat2& m) const { return {a - m.a, b - m.b, c - m.c, d - m.d}; }

    Mat2 inverse() const {
        const double dt = det();
        if (std::abs(dt) < 1e-300) throw std::runtime_error("Mat2::inverse: singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
    Mat2 transposed() const { return {a, c, b, d}; }
    Vec2 col(int i) const { return i == 0 ? Vec2{a, c} : Vec2{b, d}; }

    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }
};

/// Eigenvalues of a real 2x2 matrix as a complex pair.
inline std::array<cplx, 2> eigenvalues(const Mat2& m) {
    const double t = m.trace();
    const double disc = t * t - 4.0 * m.det();
    if (disc >= 0.0) {
        const double r = std::sqrt(disc);
        return {cplx{(t + r) / 2.0, 0.0}, cplx{(t - r) / 2.0, 0.0}};
    }
    const double r = std::sqrt(-disc);
    return {cplx{t / 2.0, r / 2.0}, cplx{t / 2.0, -r / 2.0}};
}

/// Normalized real eigenvector for a real eigenvalue.
inline Vec2 real_eigenvector(const Mat2& m, double lambda) {
    // (m - lambda I) v = 0; pick the better-conditioned row.
    Vec2 v1{m.b, lambda - m.a};
    Vec2 v2{lambda - m.d, m.c};
    Vec2 v = (norm(v1) >= norm(v2)) ? v1 : v2;
    const double n = norm(v);
    if (n < 1e-14) throw std::runtime_error("real_eigenvector: defective matrix");
    return v / n;
}

/// Largest/smallest singular values of a 2x2 matrix.
inline std::array<double, 2> singular_values(const Mat2& m) {
    const double t = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
    const double dt = m.det();
    const double disc = std::max(0.0, t * t - 4.0 * dt * dt);
    const double r = std::sqrt(disc);
    const double s_max = std::sqrt((t + r) / 2.0);
    const double s_min2 = (t - r) / 2.0;
    return {s_max, std::sqrt(std::max(0.0, s_min2))};
}

/// Fractional part in [0,1).
inline double wrap01(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r -= 1.0;   // guard against floor(x) = x - 1 rounding
    return r;
}

inline Vec2 wrap01(const Vec2& v) { return {wrap01(v.x), wrap01(v.y)}; }

/// Reduce to [-1/2, 1/2).
inline double wrap_half(double x) {
    double r = x - std::round(x);
    if (r < -0.5) r += 1.0;
    if (r >= 0.5) r -= 1.0;
    return r;
}

inline Vec2 wrap_half(const Vec2& v) { return {wrap_half(v.x), wrap_half(v.y)}; }

inline double torus_dist(const Vec2& a, const Vec2& b) {
    return norm(wrap_half(a - b));
}

struct Vec2i {
    long long x = 0;
    long long y = 0;
    bool operator==(const Vec2i& o) const { return x == o.x && y == o.y; }
    Vec2i operator+(const Vec2i& o) const { return {x + o.x, y + o.y}; }
    Vec2i operator-(const Vec2i& o) const { return {x - o.x, y - o.y}; }
};

inline long long det(const Vec2i& a, const Vec2i& b) { return a.x * b.y - a.y * b.x; }
inline Vec2 to_vec2(const Vec2i& n) { return {double(n.x), double(n.y)}; }

}  // namespace tangle
