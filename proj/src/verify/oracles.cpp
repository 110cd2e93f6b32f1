#include "hilbert_ball/verify.hpp"

#include "hilbert_ball/metrics.hpp"
#include "hilbert_ball/moebius.hpp"
#include "hilbert_ball/numerics.hpp"

#include <cmath>
#include <numbers>

namespace hball::verify {

QuadratureRule gauss_legendre(int n) {
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double step = p0 / dp;
            z -= step;
            if (std::abs(step) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

double elliptic_k_quadrature(double r, int points) {
    const QuadratureRule rule = gauss_legendre(points);
    const double half = 0.25 * std::numbers::pi; // theta in [0, pi/2]
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double theta = half * (rule.nodes[i] + 1.0);
        const double s = std::sin(theta);
        sum += rule.weights[i] / std::sqrt(1.0 - r * r * s * s);
    }
    return half * sum;
}

namespace {

template <typename PointAt>
CircleExtrema extrema_over_angle(const PointInBall& x, PointAt&& point_at, int samples) {
    auto h_at = [&](double psi) { return hilbert_oracle(x, point_at(psi)).value; };
    const double step = 2.0 * std::numbers::pi / samples;
    int imin = 0, imax = 0;
    double vmin = h_at(0.0), vmax = vmin;
    for (int i = 1; i < samples; ++i) {
        const double v = h_at(i * step);
        if (v < vmin) vmin = v, imin = i;
        if (v > vmax) vmax = v, imax = i;
    }
    const Extremum lo = golden_section_minimize(h_at, (imin - 1) * step, (imin + 1) * step, 1e-13);
    const Extremum hi = golden_section_maximize(h_at, (imax - 1) * step, (imax + 1) * step, 1e-13);
    return {std::min(vmin, lo.value), std::max(vmax, hi.value)};
}

} // namespace

CircleExtrema hilbert_extrema_on_circle(const PointInBall& x, double r, int samples) {
    return extrema_over_angle(
        x, [&](double psi) { return PointInBall(x[0] + r * std::cos(psi), x[1] + r * std::sin(psi)); }, samples);
}

CircleExtrema hilbert_extrema_on_hyperbolic_circle(const PointInBall& x, double r, int samples) {
    // S_rho(x, r) is the image of the Euclidean circle |w| = th(r/2) under T_{-x}.
    const PointInBall minus_x(-x[0], -x[1]);
    const double radius = std::tanh(0.5 * r);
    return extrema_over_angle(
        x,
        [&](double psi) {
            return t_a(minus_x, PointInBall(radius * std::cos(psi), radius * std::sin(psi)));
        },
        samples);
}

double perpendicular_foot_distance(std::span<const double> x, std::span<const double> y) {
    const Vec d = sub(y, x);
    const double s = -dot(x, d) / dot(d, d);
    return norm(axpy(x, s, d));
}

} // namespace hball::verify
