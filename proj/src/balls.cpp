#include "hilbert_ball/balls.hpp"

#include "hilbert_ball/error.hpp"
#include "hilbert_ball/metrics.hpp"

#include <cmath>
#include <numbers>

namespace hball {

std::string_view to_string(BallKind k) {
    switch (k) {
    case BallKind::euclidean: return "euclidean";
    case BallKind::hilbert: return "hilbert";
    case BallKind::hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

bool BallSpec::contains(const PointInBall& p) const {
    switch (kind) {
    case BallKind::euclidean: return distance(center.coords(), p.coords()) < radius;
    case BallKind::hilbert: return hilbert(center, p) < radius;
    case BallKind::hyperbolic: return rho(center, p) < radius;
    }
    return false;
}

InclusionRadii euclidean_to_hilbert_radii(const PointInBall& x, double r) {
    const double t = x.norm();
    if (!(r > 0.0)) throw GeometryError(ErrorKind::ArgumentOutOfRange, "radius must be positive");
    if (!(r < 1.0 - t)) throw GeometryError(ErrorKind::RadiusTooLarge, "need r < 1 - |x|");

    InclusionRadii out{};
    if (t <= r) {
        out.inner = std::log((1.0 + t) * (1.0 - t + r) / ((1.0 - t) * (1.0 + t - r)));
    } else {
        const double w = (1.0 - t) * (1.0 + t);
        const double root = std::sqrt(r * r + w);
        out.inner = std::log(w * root / ((root - r) * (w - r * (root - r))));
    }
    out.outer = std::log((1.0 - t) * (1.0 + t + r) / ((1.0 + t) * (1.0 - t - r)));
    return out;
}

InclusionRadii hilbert_to_euclidean_radii(const PointInBall& x, double l) {
    if (!(l > 0.0)) throw GeometryError(ErrorKind::InvalidLevel, "level must be positive");
    const double t = x.norm();
    const double w = (1.0 - t) * (1.0 + t);
    const double el = std::exp(l);
    const double em1 = std::expm1(l);

    InclusionRadii out{};
    out.inner = em1 * w / (1.0 - t + el * (1.0 + t));
    // The first branch is the self-consistent choice exactly when |x| <= th(l/2).
    if (t <= std::tanh(0.5 * l))
        out.outer = em1 * w / (1.0 + t + el * (1.0 - t));
    else
        out.outer = 0.5 * std::sqrt(w / el) * em1;
    return out;
}

InclusionRadii hyperbolic_to_hilbert_radii(const PointInBall& x, double r) {
    if (!(r > 0.0)) throw GeometryError(ErrorKind::ArgumentOutOfRange, "radius must be positive");
    return {2.0 * std::asinh(std::sqrt(x.conorm2()) * std::sinh(0.5 * r)), r};
}

double boundary_scale(double x_norm, double level, double psi) {
    const double w = (1.0 - x_norm) * (1.0 + x_norm);
    const double el = std::exp(level);
    return w * std::expm1(level) / (w + el * (1.0 + x_norm * x_norm - 2.0 * x_norm * std::cos(psi)));
}

Vec hilbert_ball_boundary_point(const PointInBall& x, double level, double psi) {
    if (x.dim() != 2) throw GeometryError(ErrorKind::DimensionMismatch, "ball boundary is planar");
    if (!(level > 0.0)) throw GeometryError(ErrorKind::InvalidLevel, "level must be positive");
    if (x.is_origin()) {
        const double radius = std::tanh(0.5 * level);
        return {radius * std::cos(psi), radius * std::sin(psi)};
    }
    const Complex cx = x.to_complex();
    const Complex u = (cx / x.norm()) * std::polar(1.0, psi);
    const Complex y = cx + boundary_scale(x.norm(), level, psi) * (cx - u);
    return {y.real(), y.imag()};
}

BallBoundary2D hilbert_ball_boundary(const PointInBall& x, double level, int num_samples) {
    if (x.dim() != 2) throw GeometryError(ErrorKind::DimensionMismatch, "ball boundary is planar");
    if (!(level > 0.0)) throw GeometryError(ErrorKind::InvalidLevel, "level must be positive");
    if (num_samples < 3) throw GeometryError(ErrorKind::ArgumentOutOfRange, "need at least 3 samples");

    BallBoundary2D out{x, level, {}};
    out.samples.reserve(static_cast<std::size_t>(num_samples));
    for (int i = 0; i < num_samples; ++i) {
        const double psi = 2.0 * std::numbers::pi * i / num_samples;
        out.samples.push_back({psi, hilbert_ball_boundary_point(x, level, psi)});
    }
    return out;
}

} // namespace hball
