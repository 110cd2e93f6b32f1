#pragma once

#include "hilbert_ball/geom_core.hpp"

#include <string_view>
#include <vector>

namespace hball {

enum class BallKind { euclidean, hilbert, hyperbolic };

std::string_view to_string(BallKind k);

struct BallSpec {
    PointInBall center;
    double radius;
    BallKind kind;

    /// Open-ball membership in the ball's own metric.
    bool contains(const PointInBall& p) const;
};

/// Radii of an inner and an outer ball of another kind around the same center:
/// B_other(x, inner) ⊆ B(x, r) ⊆ B_other(x, outer).
struct InclusionRadii {
    double inner;
    double outer;
};

/// Euclidean radius r -> Hilbert levels (l0 max, l1 min). Needs 0 < r < 1 - |x|.
InclusionRadii euclidean_to_hilbert_radii(const PointInBall& x, double r);

/// Hilbert level l -> Euclidean radii (r0 max, r1 min).
InclusionRadii hilbert_to_euclidean_radii(const PointInBall& x, double l);

/// Hyperbolic radius r -> Hilbert levels (l0 max, l1 min).
InclusionRadii hyperbolic_to_hilbert_radii(const PointInBall& x, double r);

struct BoundarySample {
    double psi;
    Vec point;
};

struct BallBoundary2D {
    PointInBall center;
    double level;
    std::vector<BoundarySample> samples;
};

/// k1(psi) = (1-|x|^2)(e^l - 1) / (1 - |x|^2 + e^l (1 + |x|^2 - 2|x| cos psi)).
double boundary_scale(double x_norm, double level, double psi);

/// Point of the Hilbert sphere S_h(x, l) reached from direction psi.
Vec hilbert_ball_boundary_point(const PointInBall& x, double level, double psi);

/// Uniform psi sampling of the Hilbert sphere around a planar center.
BallBoundary2D hilbert_ball_boundary(const PointInBall& x, double level, int num_samples = 512);

} // namespace hball
