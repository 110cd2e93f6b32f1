#include "hilbert_ball/metrics.hpp"

#include "hilbert_ball/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hball {

namespace {

bool same_point(const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    return x == y;
}

// arch(1 + e) without forming 1 + e.
double arch1p(double e) { return std::log1p(e + std::sqrt(e * (e + 2.0))); }

} // namespace

std::string_view to_string(Method m) {
    switch (m) {
    case Method::cross_ratio_oracle: return "cross_ratio_oracle";
    case Method::ch_closed_form: return "ch_closed_form";
    case Method::sh_identity: return "sh_identity";
    case Method::equal_norm_form: return "equal_norm_form";
    case Method::closed_form: return "closed_form";
    }
    return "unknown";
}

MetricValue hilbert_oracle(const PointInBall& x, const PointInBall& y) {
    if (same_point(x, y)) return {0.0, Method::cross_ratio_oracle};
    const Chord c = chord_through(x, y);
    return {std::log(cross_ratio(c.u, x.coords(), y.coords(), c.v)), Method::cross_ratio_oracle};
}

MetricValue hilbert_ch_form(const PointInBall& x, const PointInBall& y) {
    if (same_point(x, y)) return {0.0, Method::ch_closed_form};
    const double xy = dot(x.coords(), y.coords());
    const double s = std::sqrt(x.conorm2() * y.conorm2());
    const double arg = (1.0 - xy) / s;
    if (arg < 1.0 - 1e-12)
        throw GeometryError(ErrorKind::InternalConsistency, "ch(h/2) argument below 1");

    // (1 - x.y)^2 - s^2 = |x - y|^2 (1 - m1^2) = |y - x|^2 (1 - |x|^2) + (x.(y - x))^2,
    // a sum of non-negative terms, so arg - 1 never cancels.
    const Vec e = sub(y.coords(), x.coords());
    const double t = dot(x.coords(), e);
    double excess = (norm2(e) * x.conorm2() + t * t) / (s * (1.0 - xy + s));
    if (excess < 0.0) excess = 0.0; // clamp: argument within [1 - 1e-12, 1)
    return {2.0 * arch1p(excess), Method::ch_closed_form};
}

MetricValue hilbert_sh_identity(const PointInBall& x, const PointInBall& y) {
    if (same_point(x, y)) return {0.0, Method::sh_identity};
    const double r = rho(x, y);
    return {2.0 * std::asinh(std::sqrt(chord_half_length2(x, y)) * std::sinh(0.5 * r)), Method::sh_identity};
}

double equal_norm_formula(double norm2_value, double d) {
    const double root = std::sqrt(4.0 * (1.0 - norm2_value) + d * d);
    return 2.0 * std::log((root + d) / (root - d));
}

MetricValue hilbert_equal_norm(const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    if (std::abs(x.norm() - y.norm()) > 1e-10)
        throw GeometryError(ErrorKind::UnequalNorms, "equal-norm form needs |x| = |y|");
    if (x == y) return {0.0, Method::equal_norm_form};
    return {equal_norm_formula(x.norm2(), distance(x.coords(), y.coords())), Method::equal_norm_form};
}

MetricValue hyperbolic(const PointInBall& x, const PointInBall& y) {
    if (same_point(x, y)) return {0.0, Method::closed_form};
    const double d = distance(x.coords(), y.coords());
    return {2.0 * std::asinh(d / std::sqrt(x.conorm2() * y.conorm2())), Method::closed_form};
}

double hyperbolic_complex(Complex x, Complex y) {
    return 2.0 * std::atanh(std::abs((x - y) / (1.0 - x * std::conj(y))));
}

MetricValue distance_ratio(const PointInBall& x, const PointInBall& y) {
    if (same_point(x, y)) return {0.0, Method::closed_form};
    const double d = distance(x.coords(), y.coords());
    const double dmin = std::min(1.0 - x.norm(), 1.0 - y.norm());
    return {std::log1p(d / dmin), Method::closed_form};
}

BoundPair rotation_bounds_far_point(const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    const double d = distance(x.coords(), y.coords());
    if (d <= 1e-14) throw GeometryError(ErrorKind::CoincidentPoints, "rotation bounds of coincident points");
    const double t = std::max(x.norm(), y.norm());
    const double w = 1.0 - t * t;
    const double root = std::sqrt(d * d + w);

    BoundPair b;
    b.lower = std::log(w * root / ((root - d) * (w - d * (root - d))));

    const double equal_norm_branch = equal_norm_formula(t * t, d);
    if (1.0 + t - d <= 0.0) {
        b.upper = std::numeric_limits<double>::infinity();
        b.upper_finite = false;
    } else {
        const double collinear_branch = std::log((1.0 + t) * (1.0 - t + d) / ((1.0 - t) * (1.0 + t - d)));
        b.upper = std::max(collinear_branch, equal_norm_branch);
    }
    return b;
}

BoundPair midpoint_rotation_bounds(const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    const double d = distance(x.coords(), y.coords());
    if (d <= 1e-14) throw GeometryError(ErrorKind::CoincidentPoints, "rotation bounds of coincident points");
    const double s = norm(add(x.coords(), y.coords()));
    const double root = std::sqrt(4.0 - s * s);

    BoundPair b;
    b.lower = 2.0 * std::log((root + d) / (root - d));
    if (d < 2.0 - s) {
        b.upper = std::log(((2.0 + d) * (2.0 + d) - s * s) / ((2.0 - d) * (2.0 - d) - s * s));
    } else {
        b.upper = std::numeric_limits<double>::infinity();
        b.upper_finite = false;
    }
    return b;
}

} // namespace hball
