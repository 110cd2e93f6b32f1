#pragma once

#include "hilbert_ball/geom_core.hpp"

#include <optional>

namespace hball {

/// Inversion in S^{n-1}(c, sqrt(|c|^2 - 1)), a sphere orthogonal to the unit sphere.
class SphereInversion {
public:
    explicit SphereInversion(Vec center);

    const Vec& center() const noexcept { return center_; }
    double radius2() const noexcept { return radius2_; }

    /// c + (|c|^2 - 1)(z - c) / |z - c|^2. Throws PoleHit at z = c.
    Vec operator()(std::span<const double> z) const;
    PointInBall operator()(const PointInBall& z) const { return PointInBall((*this)(z.coords())); }

private:
    Vec center_;
    double radius2_;
};

inline Vec invert(const SphereInversion& inv, std::span<const double> z) { return inv(z); }

/// Inversion with f(x) = y whose center is L(x, y) ∩ L(x*, y*).
SphereInversion inversion_swapping(const PointInBall& x, const PointInBall& y);

/// Inversion preserving the chord through x, y that makes |f(x)| = |f(y)|.
SphereInversion symmetrizing_inversion(const PointInBall& x, const PointInBall& y);

/// Point w on [x, y] with rho(x, w) = rho(w, y), by bisection on the segment.
PointInBall hyperbolic_midpoint_on_segment(const PointInBall& x, const PointInBall& y);

/// The automorphism T_a of B^n with T_a(a) = 0.
class MoebiusAuto {
public:
    explicit MoebiusAuto(PointInBall a) : a_(std::move(a)) {}

    const PointInBall& parameter() const noexcept { return a_; }
    PointInBall operator()(const PointInBall& z) const;
    /// T_a^{-1} = T_{-a}.
    PointInBall inverse(const PointInBall& w) const;

private:
    PointInBall a_;
};

PointInBall t_a(const PointInBall& a, const PointInBall& z);

/// p_a ∘ σ_a for any n >= 2 (the n = 2 path of t_a uses the complex formula instead).
PointInBall t_a_reflection_form(const PointInBall& a, const PointInBall& z);

/// (z - a) / (1 - conj(a) z)
Complex t_a_complex(Complex a, Complex z);

/// h(T_a x, T_a y) written through m1, m2 and h(x, y).
double distortion_identity(const PointInBall& a, const PointInBall& x, const PointInBall& y);

/// Closed form for the distance from 0 to L(T_a x, T_a y) in the plane.
double m2_complex_form(const PointInBall& a, const PointInBall& x, const PointInBall& y);

struct DistortionBounds {
    double minxy_bound = 0.0;
    std::optional<double> half_a_bound; // present only when |x|, |y| < |a|/2
    double linear_bound = 0.0;
    bool linear_valid = false;          // the linear bound holds only when m2 <= m1
};

/// Upper bounds for h(T_a x, T_a y).
DistortionBounds distortion_upper_bounds(const PointInBall& a, const PointInBall& x, const PointInBall& y);

} // namespace hball
