#include "hilbert_ball/moebius.hpp"

#include "hilbert_ball/error.hpp"
#include "hilbert_ball/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace hball {

SphereInversion::SphereInversion(Vec center) : center_(std::move(center)) {
    const double c2 = norm2(center_);
    if (!(std::sqrt(c2) > 1.0 + 1e-12))
        throw GeometryError(ErrorKind::DegenerateConfiguration, "inversion center must lie outside the closed unit ball");
    radius2_ = c2 - 1.0;
}

Vec SphereInversion::operator()(std::span<const double> z) const {
    const Vec diff = sub(z, center_);
    const double d2 = norm2(diff);
    if (std::sqrt(d2) < 1e-14) throw GeometryError(ErrorKind::PoleHit, "inversion evaluated at its center");
    return axpy(center_, radius2_ / d2, diff);
}

SphereInversion inversion_swapping(const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    if (x.is_origin() || y.is_origin())
        throw GeometryError(ErrorKind::DegenerateConfiguration, "inversion_swapping needs nonzero points");
    if (collinear_with_origin(x, y))
        throw GeometryError(ErrorKind::DegenerateConfiguration, "points are collinear with the origin");
    if (std::abs(x.norm() - y.norm()) <= 1e-12)
        throw GeometryError(ErrorKind::DegenerateConfiguration, "equal norms: L(x,y) and L(x*,y*) are parallel");

    const PlaneFrame frame = reduce_to_plane(x, y);
    const auto px = frame.to_plane(x.coords());
    const auto py = frame.to_plane(y.coords());
    const std::array<double, 2> sx{px[0] / x.norm2(), px[1] / x.norm2()};
    const std::array<double, 2> sy{py[0] / y.norm2(), py[1] / y.norm2()};

    // px + s (py - px) = sx + t (sy - sx)
    const double a11 = py[0] - px[0], a21 = py[1] - px[1];
    const double a12 = -(sy[0] - sx[0]), a22 = -(sy[1] - sx[1]);
    const double b1 = sx[0] - px[0], b2 = sx[1] - px[1];

    const double n1 = std::hypot(a11, a21), n2 = std::hypot(a12, a22);
    const double c11 = a11 / n1, c21 = a21 / n1, c12 = a12 / n2, c22 = a22 / n2;
    const double det_unit = std::abs(c11 * c22 - c12 * c21);
    const double fro2 = c11 * c11 + c21 * c21 + c12 * c12 + c22 * c22;
    const double cond = (fro2 + std::sqrt(std::max(0.0, fro2 * fro2 - 4.0 * det_unit * det_unit))) / (2.0 * det_unit);
    if (!(cond <= 1e12))
        throw GeometryError(ErrorKind::DegenerateConfiguration, "L(x,y) and L(x*,y*) are nearly parallel");

    const double det = a11 * a22 - a12 * a21;
    const double s = (b1 * a22 - a12 * b2) / det;
    return SphereInversion(frame.from_plane({px[0] + s * a11, px[1] + s * a21}));
}

PointInBall hyperbolic_midpoint_on_segment(const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    const Vec dir = sub(y.coords(), x.coords());
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        const PointInBall w(axpy(x.coords(), mid, dir));
        if (rho(x, w) < rho(w, y))
            lo = mid;
        else
            hi = mid;
    }
    return PointInBall(axpy(x.coords(), 0.5 * (lo + hi), dir));
}

SphereInversion symmetrizing_inversion(const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    if (distance(x.coords(), y.coords()) <= 1e-14)
        throw GeometryError(ErrorKind::CoincidentPoints, "symmetrizing inversion of coincident points");
    if (std::abs(x.norm() - y.norm()) <= 1e-12)
        throw GeometryError(ErrorKind::DegenerateConfiguration, "|x| = |y| already; the identity suffices");

    Vec e = sub(y.coords(), x.coords());
    e = scale(e, 1.0 / norm(e));
    // m = (u + v)/2 is the foot of the perpendicular from 0 to L(x, y).
    const Vec m = axpy(x.coords(), -dot(x.coords(), e), e);
    const PointInBall w = hyperbolic_midpoint_on_segment(x, y);
    const double sigma = dot(sub(w.coords(), m), e);
    if (std::abs(sigma) < 1e-15)
        throw GeometryError(ErrorKind::DegenerateConfiguration, "hyperbolic midpoint coincides with chord midpoint");

    // Center c on L(x, y) with (w - c).(m - c) = |c|^2 - 1, so that f(w) = m.
    return SphereInversion(axpy(m, (1.0 - norm2(m)) / sigma, e));
}

Complex t_a_complex(Complex a, Complex z) { return (z - a) / (1.0 - std::conj(a) * z); }

// 1 - |T_a z|^2 = (1-|a|^2)(1-|z|^2) / (|z-a|^2 + (1-|a|^2)(1-|z|^2))
static double t_a_conorm2(const PointInBall& a, const PointInBall& z) {
    const double p = a.conorm2() * z.conorm2();
    return p / (norm2(sub(z.coords(), a.coords())) + p);
}

PointInBall t_a_reflection_form(const PointInBall& a, const PointInBall& z) {
    require_same_dim(a, z);
    if (a.is_origin()) return z;
    // σ_a: inversion in S(a*, sqrt(1/|a|^2 - 1))
    const Vec astar = scale(a.coords(), 1.0 / a.norm2());
    const Vec diff = sub(z.coords(), astar);
    const Vec sigma = axpy(astar, (1.0 / a.norm2() - 1.0) / norm2(diff), diff);
    // p_a: reflection in the hyperplane through 0 orthogonal to a
    return PointInBall::with_conorm2(axpy(sigma, -2.0 * dot(sigma, a.coords()) / a.norm2(), a.coords()),
                                     t_a_conorm2(a, z));
}

PointInBall t_a(const PointInBall& a, const PointInBall& z) {
    require_same_dim(a, z);
    if (a.is_origin()) return z;
    if (z.dim() == 2) {
        const Complex w = t_a_complex(a.to_complex(), z.to_complex());
        return PointInBall::with_conorm2(Vec{w.real(), w.imag()}, t_a_conorm2(a, z));
    }
    return t_a_reflection_form(a, z);
}

PointInBall MoebiusAuto::operator()(const PointInBall& z) const { return t_a(a_, z); }

PointInBall MoebiusAuto::inverse(const PointInBall& w) const {
    return t_a(PointInBall(scale(a_.coords(), -1.0)), w);
}

double distortion_identity(const PointInBall& a, const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    if (distance(x.coords(), y.coords()) <= 1e-14)
        throw GeometryError(ErrorKind::CoincidentPoints, "distortion of coincident points");
    const double factor = std::sqrt(chord_half_length2(t_a(a, x), t_a(a, y)) / chord_half_length2(x, y));
    return 2.0 * std::asinh(factor * std::sinh(0.5 * hilbert(x, y)));
}

double m2_complex_form(const PointInBall& a, const PointInBall& x, const PointInBall& y) {
    const Complex ca = a.to_complex(), cx = x.to_complex(), cy = y.to_complex();
    const Complex one(1.0, 0.0);
    const Complex num = (cx - ca) * (std::conj(cy) - std::conj(ca)) * (one - ca * std::conj(cx)) *
                        (one - std::conj(ca) * cy);
    const Complex A = (cx - ca) * (one - ca * std::conj(cx)) * std::norm(one - ca * std::conj(cy));
    const Complex B = (cy - ca) * (one - ca * std::conj(cy)) * std::norm(one - ca * std::conj(cx));
    const double den = std::abs(A - B);
    if (den < 1e-300)
        throw GeometryError(ErrorKind::DegenerateConfiguration, "T_a(x) = T_a(y)");
    return std::abs(num.imag()) / den;
}

DistortionBounds distortion_upper_bounds(const PointInBall& a, const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    if (distance(x.coords(), y.coords()) <= 1e-14)
        throw GeometryError(ErrorKind::CoincidentPoints, "distortion bounds of coincident points");
    const double h = hilbert(x, y);
    const double sh = std::sinh(0.5 * h);

    DistortionBounds out;
    const double mn = std::min({x.norm(), y.norm(), 0.5 * norm(add(x.coords(), y.coords()))});
    out.minxy_bound = 2.0 * std::asinh(sh / std::sqrt((1.0 - mn) * (1.0 + mn)));

    const double half = 0.5 * a.norm();
    if (x.norm() < half && y.norm() < half)
        out.half_a_bound = 2.0 * std::asinh(sh / std::sqrt(1.0 - half * half));

    const PointInBall tx = t_a(a, x), ty = t_a(a, y);
    out.linear_bound = std::sqrt(chord_half_length2(tx, ty) / chord_half_length2(x, y)) * h;
    out.linear_valid = dist_origin_to_line(tx, ty) <= dist_origin_to_line(x, y);
    return out;
}

} // namespace hball
