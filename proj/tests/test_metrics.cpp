#include "hilbert_ball/error.hpp"
#include "hilbert_ball/metrics.hpp"

#include <doctest.h>

#include <cmath>

using namespace hball;
using doctest::Approx;

namespace {

const PointInBall kA(0.5, 0.0), kB(0.0, 0.5);
// 2 arch(4/3), 50-digit reference
constexpr double kHab = 1.5907309224478112610557818663;
// 2 arsh(2 sqrt2 / 3)
constexpr double kRhoAb = 1.6806997724280035644635092494;

} // namespace

TEST_CASE("hilbert distance on the reference pairs, all paths") {
    const PointInBall o(0.0, 0.0), half(0.5, 0.0), mhalf(-0.5, 0.0);
    for (auto f : {hilbert_oracle, hilbert_ch_form, hilbert_sh_identity}) {
        CHECK(f(o, half).value == Approx(std::log(3.0)).epsilon(1e-14));
        CHECK(f(kA, kB).value == Approx(kHab).epsilon(1e-14));
        CHECK(f(half, mhalf).value == Approx(2.0 * std::log(3.0)).epsilon(1e-14));
        CHECK(f(PointInBall(0.3, 0.4), PointInBall(0.3, 0.4)).value == 0.0);
    }
    CHECK(hilbert_equal_norm(kA, kB).value == Approx(kHab).epsilon(1e-14));
    // |x - y| = 1, sqrt(4(1 - |x|^2) + |x - y|^2) = 2: 2 log(3/1), same as the cross ratio 9
    CHECK(hilbert_equal_norm(half, mhalf).value == Approx(2.0 * std::log(3.0)).epsilon(1e-14));
    CHECK(hilbert_equal_norm(half, half).value == 0.0);
    CHECK(hilbert(kA, kB) == Approx(kHab).epsilon(1e-14));
}

TEST_CASE("method tags") {
    CHECK(hilbert_oracle(kA, kB).method == Method::cross_ratio_oracle);
    CHECK(hilbert_ch_form(kA, kB).method == Method::ch_closed_form);
    CHECK(hilbert_sh_identity(kA, kB).method == Method::sh_identity);
    CHECK(hilbert_equal_norm(kA, kB).method == Method::equal_norm_form);
    CHECK(to_string(Method::sh_identity) == "sh_identity");
}

TEST_CASE("equal-norm form rejects unequal norms") {
    try {
        hilbert_equal_norm(PointInBall(0.5, 0.0), PointInBall(0.0, 0.4));
        FAIL("expected UnequalNorms");
    } catch (const GeometryError& e) {
        CHECK(e.kind() == ErrorKind::UnequalNorms);
    }
}

TEST_CASE("sh identity is exact through the origin") {
    for (double t : {0.1, 0.5, 0.9, 0.999}) {
        const PointInBall o(0.0, 0.0), y(t, 0.0);
        CHECK(hilbert_sh_identity(o, y).value == Approx(rho(o, y)).epsilon(1e-15));
    }
}

TEST_CASE("axis point of the level-1.5 disk") {
    // boundary point for psi = pi from k1 evaluated at 30 digits
    CHECK(hilbert_sh_identity(PointInBall(0.75, 0.0), PointInBall(0.938217876405028073, 0.0)).value ==
          Approx(1.5).epsilon(1e-13));
}

TEST_CASE("hyperbolic and distance-ratio metrics") {
    const PointInBall o(0.0, 0.0), half(0.5, 0.0);
    CHECK(rho(o, half) == Approx(std::log(3.0)).epsilon(1e-15));
    CHECK(rho(kA, kB) == Approx(kRhoAb).epsilon(1e-15));
    CHECK(rho(kA, kA) == 0.0);
    CHECK(hyperbolic_complex({0.0, 0.0}, {0.5, 0.0}) == Approx(std::log(3.0)).epsilon(1e-15));
    CHECK(hyperbolic_complex({0.5, 0.0}, {0.0, 0.5}) == Approx(kRhoAb).epsilon(1e-14));
    CHECK(jdist(o, half) == Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(jdist(kA, kB) == Approx(std::log(1.0 + std::sqrt(2.0))).epsilon(1e-15));
    CHECK(jdist(kB, kB) == 0.0);
}

TEST_CASE("rotation bounds bracket h") {
    const BoundPair b = rotation_bounds_far_point(kA, kB);
    CHECK(b.upper_finite);
    CHECK(b.lower <= kHab);
    CHECK(kHab <= b.upper);
    CHECK(b.brackets(kHab, 0.0));

    // equal norms: second upper expression is h itself
    const PointInBall x(0.6, 0.0), y(0.6 * std::cos(1.0), 0.6 * std::sin(1.0));
    const double d = distance(x.coords(), y.coords());
    CHECK(equal_norm_formula(0.36, d) == Approx(hilbert_oracle(x, y).value).epsilon(1e-13));

    // collinear with the origin, y closer to 0: first upper expression is h
    const PointInBall p(0.7, 0.0), q(0.65, 0.0);
    const double t = 0.7, s = 0.05;
    const double first = std::log((1 + t) * (1 - t + s) / ((1 - t) * (1 + t - s)));
    CHECK(first == Approx(hilbert_oracle(p, q).value).epsilon(1e-13));
    CHECK(rotation_bounds_far_point(p, q).upper == Approx(first).epsilon(1e-13));
}

TEST_CASE("midpoint rotation bounds") {
    const BoundPair b = midpoint_rotation_bounds(kA, kB);
    CHECK(b.lower == Approx(kHab).epsilon(1e-13));
    CHECK(b.upper_finite);
    CHECK(b.upper >= kHab);

    const PointInBall p(0.2, 0.0), q(0.6, 0.0);
    const BoundPair c = midpoint_rotation_bounds(p, q);
    CHECK(c.upper == Approx(hilbert_oracle(p, q).value).epsilon(1e-13));
    CHECK(c.lower < c.upper);

    // |x - y| >= 2 - |x + y| leaves the upper bound open
    const BoundPair far = midpoint_rotation_bounds(PointInBall(0.95, 0.0), PointInBall(-0.9, 0.3));
    CHECK_FALSE(far.upper_finite);
    CHECK(std::isinf(far.upper));
}

TEST_CASE("bounds reject coincident points") {
    CHECK_THROWS_AS(rotation_bounds_far_point(kA, kA), GeometryError);
    CHECK_THROWS_AS(midpoint_rotation_bounds(kA, kA), GeometryError);
}

TEST_CASE("higher dimensions agree with the planar values") {
    const PointInBall x(Vec{0.5, 0.0, 0.0, 0.0}), y(Vec{0.0, 0.0, 0.0, 0.5});
    CHECK(hilbert_oracle(x, y).value == Approx(kHab).epsilon(1e-14));
    CHECK(hilbert_ch_form(x, y).value == Approx(kHab).epsilon(1e-14));
    CHECK(hilbert_sh_identity(x, y).value == Approx(kHab).epsilon(1e-14));
    CHECK(rho(x, y) == Approx(kRhoAb).epsilon(1e-14));
}
