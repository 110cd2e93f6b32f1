#include "hilbert_ball/error.hpp"
#include "hilbert_ball/geom_core.hpp"
#include "hilbert_ball/metrics.hpp"

#include <doctest.h>

#include <cmath>

using namespace hball;

namespace {

bool throws_kind(ErrorKind k, auto&& f) {
    try {
        f();
    } catch (const GeometryError& e) {
        return e.kind() == k;
    }
    return false;
}

} // namespace

TEST_CASE("point validation") {
    CHECK_NOTHROW(PointInBall(0.3, 0.4));
    CHECK(throws_kind(ErrorKind::InvalidPoint, [] { PointInBall(1.0, 0.0); }));
    CHECK(throws_kind(ErrorKind::InvalidPoint, [] { PointInBall(0.6, 0.8); }));
    CHECK(throws_kind(ErrorKind::InvalidPoint, [] { PointInBall(Vec{0.5}); }));
    CHECK(throws_kind(ErrorKind::InvalidPoint, [] { PointInBall(NAN, 0.0); }));
    CHECK(throws_kind(ErrorKind::InvalidPoint, [] { PointInBall(1.0 - 1e-13, 0.0); }));
    CHECK_NOTHROW(PointInBall(1.0 - 1e-11, 0.0));

    const PointInBall p(0.3, 0.4);
    CHECK(p.norm() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.conorm2() == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(PointInBall::origin(4).is_origin());
    CHECK(PointInBall::from_complex({0.1, -0.2})[1] == -0.2);
}

TEST_CASE("cached conorm must match the coordinates") {
    CHECK(PointInBall::with_conorm2(Vec{0.6, 0.0}, 0.64).conorm2() == 0.64);
    CHECK(throws_kind(ErrorKind::InternalConsistency, [] { PointInBall::with_conorm2(Vec{0.6, 0.0}, 0.5); }));
}

TEST_CASE("dimension mismatch") {
    const PointInBall a(0.1, 0.2), b(Vec{0.1, 0.2, 0.0});
    CHECK(throws_kind(ErrorKind::DimensionMismatch, [&] { require_same_dim(a, b); }));
    CHECK(throws_kind(ErrorKind::DimensionMismatch, [&] { hilbert(a, b); }));
}

TEST_CASE("cross ratio") {
    const Vec u{-1, 0}, v{1, 0};
    CHECK(cross_ratio(u, Vec{0, 0}, Vec{0.5, 0}, v) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(cross_ratio(u, Vec{0.2, 0}, Vec{0.2, 0}, v) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cross_ratio(u, Vec{-0.5, 0}, Vec{0.5, 0}, v) == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(throws_kind(ErrorKind::DegenerateConfiguration, [&] { cross_ratio(u, u, Vec{0.5, 0}, v); }));
}

TEST_CASE("chord through two points") {
    SUBCASE("diameter") {
        const Chord c = chord_through(PointInBall(0.0, 0.0), PointInBall(0.5, 0.0));
        CHECK(c.u[0] == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(c.v[0] == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("line x1 + x2 = 1/2") {
        const Chord c = chord_through(PointInBall(0.5, 0.0), PointInBall(0.0, 0.5));
        const double s7 = std::sqrt(7.0);
        CHECK(c.u[0] == doctest::Approx((1 + s7) / 4).epsilon(1e-14));
        CHECK(c.u[1] == doctest::Approx((1 - s7) / 4).epsilon(1e-14));
        CHECK(c.v[0] == doctest::Approx((1 - s7) / 4).epsilon(1e-14));
        CHECK(c.v[1] == doctest::Approx((1 + s7) / 4).epsilon(1e-14));
        CHECK(norm(c.u) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("u lies on the side of x") {
        const Chord c = chord_through(PointInBall(0.75, 0.0), PointInBall(0.25, 0.0));
        CHECK(c.u[0] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(c.v[0] == doctest::Approx(-1.0).epsilon(1e-15));
    }
    SUBCASE("nearly tangent chord stays on the sphere") {
        const PointInBall x(0.999999, 0.0), y(0.999999, 1e-7);
        const Chord c = chord_through(x, y);
        CHECK(std::abs(norm(c.u) - 1.0) < 1e-14);
        CHECK(std::abs(norm(c.v) - 1.0) < 1e-14);
        CHECK(distance(c.u, x.coords()) < distance(c.u, y.coords()));
    }
}

TEST_CASE("distance from the origin to a line") {
    CHECK(dist_origin_to_line(PointInBall(0.5, 0.0), PointInBall(0.0, 0.5)) ==
          doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
    CHECK(dist_origin_to_line(PointInBall(0.3, 0.0), PointInBall(0.8, 0.0)) == 0.0);
    CHECK(dist_origin_to_line(PointInBall(0.0, 0.0), PointInBall(0.4, 0.2)) == 0.0);
    CHECK(dist_origin_to_line_complex({0.5, 0.0}, {0.0, 0.5}) ==
          doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
    CHECK(throws_kind(ErrorKind::CoincidentPoints,
                      [] { dist_origin_to_line(PointInBall(0.1, 0.1), PointInBall(0.1, 0.1)); }));
}

TEST_CASE("squared half chord agrees with 1 - m^2") {
    const PointInBall x(0.5, 0.0), y(0.0, 0.5);
    CHECK(chord_half_length2(x, y) == doctest::Approx(1.0 - 1.0 / 8.0).epsilon(1e-15));
    const Chord c = chord_through(x, y);
    CHECK(chord_half_length2(x, y) == doctest::Approx(norm2(sub(c.u, c.v)) / 4).epsilon(1e-14));
}

TEST_CASE("reduction to a plane") {
    SUBCASE("already planar") {
        const PointInBall x(Vec{0.5, 0, 0}), y(Vec{0, 0.5, 0});
        const PlaneFrame f = reduce_to_plane(x, y);
        CHECK(distance(f.project(x).coords(), f.project(y).coords()) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
        CHECK(std::abs(f.e1[2]) < 1e-15);
        CHECK(std::abs(f.e2[2]) < 1e-15);
    }
    SUBCASE("collinear with the origin") {
        const PointInBall x(Vec{0.2, 0.2, 0.2}), y(Vec{0.4, 0.4, 0.4});
        const PlaneFrame f = reduce_to_plane(x, y);
        const PointInBall px = f.project(x), py = f.project(y);
        CHECK(dot(f.e1, f.e2) == doctest::Approx(0.0));
        CHECK(norm(f.from_plane(f.to_plane(x.coords()))) == doctest::Approx(x.norm()).epsilon(1e-15));
        // diameter formula: h = rho = 2 arth|y| - 2 arth|x|
        const double want = 2.0 * (std::atanh(y.norm()) - std::atanh(x.norm()));
        CHECK(hilbert_oracle(px, py).value == doctest::Approx(want).epsilon(1e-13));
        CHECK(rho(px, py) == doctest::Approx(want).epsilon(1e-13));
    }
    SUBCASE("general position") {
        const PointInBall x(Vec{0.1, 0.2, 0.3}), y(Vec{0.3, 0.1, 0.2});
        const PlaneFrame f = reduce_to_plane(x, y);
        const PointInBall px = f.project(x), py = f.project(y);
        CHECK(px.norm() == doctest::Approx(x.norm()).epsilon(1e-14));
        CHECK(py.norm() == doctest::Approx(y.norm()).epsilon(1e-14));
        CHECK(dist_origin_to_line(px, py) == doctest::Approx(dist_origin_to_line(x, y)).epsilon(1e-13));
        CHECK(norm(sub(f.from_plane(f.to_plane(x.coords())), x.coords())) < 1e-15);
    }
}

TEST_CASE("collinearity with the origin") {
    CHECK(collinear_with_origin(PointInBall(0.2, 0.2), PointInBall(-0.4, -0.4)));
    CHECK(collinear_with_origin(PointInBall(0.0, 0.0), PointInBall(0.3, 0.1)));
    CHECK_FALSE(collinear_with_origin(PointInBall(0.2, 0.2), PointInBall(0.4, 0.41)));
}
