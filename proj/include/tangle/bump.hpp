#pragma once

#include "tangle/poly.hpp"

namespace tangle {

/// C^4 polynomial plateau profile in the squared-radius variable u:
///   B(u) = 1 for u <= plateau, B(u) = 0 for u >= 1,
/// joined by the degree-9 smoothstep (value and four derivatives match at
/// both ends). Outside [0,1) the returned value is an exact 0.0/1.0, so
/// anything built on B vanishes identically outside its support.
struct PlateauBump {
    double plateau = 0.35;

    static double step9(double t) {
        // s(0)=0, s(1)=1, s',s'',s''',s'''' = 0 at both ends
        const double t2 = t * t;
        return t2 * t2 * t * (126.0 + t * (-420.0 + t * (540.0 + t * (-315.0 + t * 70.0))));
    }
    static double step9_d(double t) {
        const double t2 = t * t;
        return t2 * t2 * (630.0 + t * (-2520.0 + t * (3780.0 + t * (-2520.0 + t * 630.0))));
    }
    static double step9_dd(double t) {
        const double t2 = t * t;
        return t2 * t * (2520.0 + t * (-12600.0 + t * (22680.0 + t * (-17640.0 + t * 5040.0))));
    }

    double value(double u) const {
        if (u <= plateau) return 1.0;
        if (u >= 1.0) return 0.0;
        return 1.0 - step9((u - plateau) / (1.0 - plateau));
    }
    double deriv(double u) const {
        if (u <= plateau || u >= 1.0) return 0.0;
        const double w = 1.0 / (1.0 - plateau);
        return -step9_d((u - plateau) * w) * w;
    }
    double deriv2(double u) const {
        if (u <= plateau || u >= 1.0) return 0.0;
        const double w = 1.0 / (1.0 - plateau);
        return -step9_dd((u - plateau) * w) * w * w;
    }

    /// Series evaluation: the polynomial piece is selected by the constant
    /// term (B is C^4, so 3-jets are continuous across the seams).
    Series value(const Series& u) const {
        const double u0 = u.c[0];
        if (u0 <= plateau) return Series::constant(1.0);
        if (u0 >= 1.0) return Series::constant(0.0);
        const double t0 = (u0 - plateau) / (1.0 - plateau);
        const double w = 1.0 / (1.0 - plateau);
        return series::lift_univariate(u, 1.0 - step9(t0), -step9_d(t0) * w,
                                       -step9_dd(t0) * w * w, -step9_ddd(t0) * w * w * w);
    }

    Series deriv(const Series& u) const {
        const double u0 = u.c[0];
        if (u0 <= plateau || u0 >= 1.0) return Series::constant(0.0);
        const double t0 = (u0 - plateau) / (1.0 - plateau);
        const double w = 1.0 / (1.0 - plateau);
        return series::lift_univariate(u, -step9_d(t0) * w, -step9_dd(t0) * w * w,
                                       -step9_ddd(t0) * w * w * w,
                                       -step9_dddd(t0) * w * w * w * w);
    }

    static double step9_ddd(double t) {
        const double t2 = t * t;
        return t2 * (7560.0 + t * (-50400.0 + t * (113400.0 + t * (-105840.0 + t * 35280.0))));
    }
    static double step9_dddd(double t) {
        return t * (15120.0 + t * (-151200.0 + t * (453600.0 + t * (-529200.0 + t * 211680.0))));
    }
};

}  // namespace tangle
