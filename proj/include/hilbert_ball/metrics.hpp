#pragma once

#include "hilbert_ball/geom_core.hpp"

#include <string_view>

namespace hball {

enum class Method {
    cross_ratio_oracle,
    ch_closed_form,
    sh_identity,
    equal_norm_form,
    closed_form, // rho and j have a single formula
};

std::string_view to_string(Method m);

struct MetricValue {
    double value = 0.0;
    Method method = Method::closed_form;
};

/// Two-sided bound on h. When `upper_finite` is false the upper side is +inf.
struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
    bool upper_finite = true;

    bool brackets(double h, double tol) const {
        return lower <= h + tol && (!upper_finite || h <= upper + tol);
    }
};

// Hilbert metric, four evaluation paths.
MetricValue hilbert_oracle(const PointInBall& x, const PointInBall& y);
MetricValue hilbert_ch_form(const PointInBall& x, const PointInBall& y);
MetricValue hilbert_sh_identity(const PointInBall& x, const PointInBall& y);
/// Requires ||x| - |y|| <= 1e-10.
MetricValue hilbert_equal_norm(const PointInBall& x, const PointInBall& y);

/// Default Hilbert distance (ch closed form).
inline double hilbert(const PointInBall& x, const PointInBall& y) { return hilbert_ch_form(x, y).value; }

MetricValue hyperbolic(const PointInBall& x, const PointInBall& y);
/// Planar form 2 arth |(x - y) / (1 - x conj(y))|.
double hyperbolic_complex(Complex x, Complex y);

MetricValue distance_ratio(const PointInBall& x, const PointInBall& y);

inline double rho(const PointInBall& x, const PointInBall& y) { return hyperbolic(x, y).value; }
inline double jdist(const PointInBall& x, const PointInBall& y) { return distance_ratio(x, y).value; }

/// Bounds from rotating the point nearer the origin about the farther one,
/// with t = max(|x|, |y|).
BoundPair rotation_bounds_far_point(const PointInBall& x, const PointInBall& y);

/// Bounds from rotating the pair about its Euclidean midpoint.
BoundPair midpoint_rotation_bounds(const PointInBall& x, const PointInBall& y);

/// Closed form of h for |x| = |y| = s at Euclidean separation d.
double equal_norm_formula(double norm2_value, double d);

} // namespace hball
