#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "tangle/geom.hpp"

namespace tangle {

/// Truncated bivariate polynomial of total degree <= 3.
///
/// Monomial order: 1, u, v, u^2, uv, v^2, u^3, u^2 v, u v^2, v^3.
/// All products are truncated at total degree 3, which makes the type a
/// carrier for 3-jets under composition (chain rule comes out exact).
template <class T>
struct Poly2 {
    static constexpr int kTerms = 10;
    std::array<T, kTerms> c{};

    static constexpr int index(int i, int j) {
        // total degree block offsets: 0,1,3,6
        const int n = i + j;
        const int base = n == 0 ? 0 : (n == 1 ? 1 : (n == 2 ? 3 : 6));
        return base + j;
    }
    static constexpr std::array<std::array<int, 2>, kTerms> exponents() {
        return {{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}}};
    }

    T& at(int i, int j) { return c[index(i, j)]; }
    const T& at(int i, int j) const { return c[index(i, j)]; }

    static Poly2 constant(T v) {
        Poly2 p;
        p.c[0] = v;
        return p;
    }
    static Poly2 var_u(T value = T{}) {
        Poly2 p;
        p.c[0] = value;
        p.c[1] = T{1};
        return p;
    }
    static Poly2 var_v(T value = T{}) {
        Poly2 p;
        p.c[0] = value;
        p.c[2] = T{1};
        return p;
    }

    Poly2 operator+(const Poly2& o) const {
        Poly2 r;
        for (int k = 0; k < kTerms; ++k) r.c[k] = c[k] + o.c[k];
        return r;
    }
    Poly2 operator-(const Poly2& o) const {
        Poly2 r;
        for (int k = 0; k < kTerms; ++k) r.c[k] = c[k] - o.c[k];
        return r;
    }
    Poly2 operator-() const {
        Poly2 r;
        for (int k = 0; k < kTerms; ++k) r.c[k] = -c[k];
        return r;
    }
    Poly2 operator*(T s) const {
        Poly2 r;
        for (int k = 0; k < kTerms; ++k) r.c[k] = c[k] * s;
        return r;
    }
    Poly2 operator+(T s) const {
        Poly2 r = *this;
        r.c[0] += s;
        return r;
    }
    Poly2 operator-(T s) const {
        Poly2 r = *this;
        r.c[0] -= s;
        return r;
    }
    Poly2& operator+=(const Poly2& o) {
        for (int k = 0; k < kTerms; ++k) c[k] += o.c[k];
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        for (int k = 0; k < kTerms; ++k) c[k] -= o.c[k];
        return *this;
    }

    /// Truncated product.
    Poly2 operator*(const Poly2& o) const {
        static constexpr auto ex = exponents();
        Poly2 r;
        for (int k = 0; k < kTerms; ++k) {
            if (c[k] == T{}) continue;
            for (int l = 0; l < kTerms; ++l) {
                if (o.c[l] == T{}) continue;
                const int i = ex[k][0] + ex[l][0];
                const int j = ex[k][1] + ex[l][1];
                if (i + j > 3) continue;
                r.c[index(i, j)] += c[k] * o.c[l];
            }
        }
        return r;
    }

    T eval(T u, T v) const {
        static constexpr auto ex = exponents();
        T s{};
        for (int k = 0; k < kTerms; ++k) {
            if (c[k] == T{}) continue;
            T m = c[k];
            for (int i = 0; i < ex[k][0]; ++i) m *= u;
            for (int j = 0; j < ex[k][1]; ++j) m *= v;
            s += m;
        }
        return s;
    }

    /// Substitute (P, Q) for (u, v); constant terms of P, Q participate.
    Poly2 compose(const Poly2& P, const Poly2& Q) const {
        static constexpr auto ex = exponents();
        // truncated powers of P and Q
        std::array<Poly2, 4> Pp, Qp;
        Pp[0] = constant(T{1});
        Qp[0] = constant(T{1});
        for (int k = 1; k <= 3; ++k) {
            Pp[k] = Pp[k - 1] * P;
            Qp[k] = Qp[k - 1] * Q;
        }
        Poly2 r;
        for (int k = 0; k < kTerms; ++k) {
            if (c[k] == T{}) continue;
            r += (Pp[ex[k][0]] * Qp[ex[k][1]]) * c[k];
        }
        return r;
    }

    /// Zero all coefficients above the given total degree.
    Poly2 truncated(int degree) const {
        static constexpr auto ex = exponents();
        Poly2 r = *this;
        for (int k = 0; k < kTerms; ++k)
            if (ex[k][0] + ex[k][1] > degree) r.c[k] = T{};
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (int k = 0; k < kTerms; ++k) m = std::max(m, std::abs(c[k]));
        return m;
    }
};

using Poly2d = Poly2<double>;
using Poly2c = Poly2<cplx>;

/// Scalar truncated Taylor series in two deviations: the "jet arithmetic"
/// number type map families are evaluated on. c[0] is the value, the rest is
/// nilpotent to degree 3.
using Series = Poly2d;

namespace series {

inline Series from_value(double v) { return Series::constant(v); }

/// Compose an analytic scalar function given by value and first three
/// derivatives at the series' constant term.
inline Series lift_univariate(const Series& s, double f0, double f1, double f2, double f3) {
    Series n = s;
    n.c[0] = 0.0;  // nilpotent part
    const Series n2 = n * n;
    const Series n3 = n2 * n;
    Series r = Series::constant(f0);
    r += n * f1;
    r += n2 * (f2 / 2.0);
    r += n3 * (f3 / 6.0);
    return r;
}

}  // namespace series

inline Series sin(const Series& s) {
    const double a = s.c[0];
    const double sa = std::sin(a), ca = std::cos(a);
    return series::lift_univariate(s, sa, ca, -sa, -ca);
}

inline Series cos(const Series& s) {
    const double a = s.c[0];
    const double sa = std::sin(a), ca = std::cos(a);
    return series::lift_univariate(s, ca, -sa, -ca, sa);
}

inline Series exp(const Series& s) {
    const double e = std::exp(s.c[0]);
    return series::lift_univariate(s, e, e, e, e);
}

inline Series sqrt(const Series& s) {
    const double a = s.c[0];
    const double r = std::sqrt(a);
    return series::lift_univariate(s, r, 0.5 / r, -0.25 / (r * a), 0.375 / (r * a * a));
}

}  // namespace tangle
