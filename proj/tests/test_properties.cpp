// Randomized invariants over the whole library.
#include "hilbert_ball/balls.hpp"
#include "hilbert_ball/lab.hpp"
#include "hilbert_ball/metrics.hpp"
#include "hilbert_ball/moebius.hpp"
#include "hilbert_ball/special_functions.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

using namespace hball;

namespace {

PointInBall rand_point(Rng& rng, int dim) { return PointInBall(sample_uniform_in_ball(rng, dim)); }

// Random rotation of R^3 from a unit quaternion.
Vec rotate3(const std::array<double, 4>& q, std::span<const double> p) {
    const double w = q[0], x = q[1], y = q[2], z = q[3];
    const double m[3][3] = {{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                            {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                            {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
    Vec out(3, 0.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += m[i][j] * p[j];
    return out;
}

} // namespace

TEST_CASE("metric axioms") {
    Rng rng(51);
    for (int dim : {2, 3}) {
        for (int i = 0; i < 3000; ++i) {
            const PointInBall x = rand_point(rng, dim), y = rand_point(rng, dim), z = rand_point(rng, dim);
            CHECK(hilbert(x, y) == doctest::Approx(hilbert(y, x)).epsilon(1e-12));
            CHECK(hilbert(x, z) <= hilbert(x, y) + hilbert(y, z) + 1e-12);
            CHECK(rho(x, z) <= rho(x, y) + rho(y, z) + 1e-12);
            CHECK(jdist(x, z) <= jdist(x, y) + jdist(y, z) + 1e-12);
            CHECK(hilbert(x, y) >= 0.0);
        }
    }
}

TEST_CASE("comparison inequalities") {
    Rng rng(52);
    for (int i = 0; i < 5000; ++i) {
        const PointInBall x = rand_point(rng, 2), y = rand_point(rng, 2);
        const double h = hilbert(x, y), r = rho(x, y), j = jdist(x, y);
        CHECK(h <= r * (1 + 1e-12) + 1e-15);
        CHECK(j <= r * (1 + 1e-12) + 1e-15);
        CHECK(r <= 2 * j * (1 + 1e-12) + 1e-15);
        CHECK(h <= 2 * j * (1 + 1e-12) + 1e-15);
    }
}

TEST_CASE("all paths agree in higher dimensions") {
    Rng rng(53);
    for (int dim : {3, 4, 7}) {
        for (int i = 0; i < 1000; ++i) {
            const PointInBall x = rand_point(rng, dim), y = rand_point(rng, dim);
            const double o = hilbert_oracle(x, y).value;
            CHECK(std::abs(hilbert_ch_form(x, y).value - o) < 1e-10);
            CHECK(std::abs(hilbert_sh_identity(x, y).value - o) < 1e-10);
        }
    }
}

TEST_CASE("rotation invariance") {
    Rng rng(54);
    for (int i = 0; i < 1000; ++i) {
        std::array<double, 4> q{};
        const Vec dir = sample_unit_direction(rng, 4);
        std::copy(dir.begin(), dir.end(), q.begin());
        const PointInBall x = rand_point(rng, 3), y = rand_point(rng, 3);
        const PointInBall rx(rotate3(q, x.coords())), ry(rotate3(q, y.coords()));
        CHECK(std::abs(hilbert(rx, ry) - hilbert(x, y)) < 1e-10);
        CHECK(std::abs(rho(rx, ry) - rho(x, y)) < 1e-10);
    }
}

TEST_CASE("inversions orthogonal to the sphere") {
    Rng rng(55);
    for (int i = 0; i < 1000; ++i) {
        const Vec dir = sample_unit_direction(rng, 3);
        const SphereInversion f(scale(dir, rng.uniform(1.05, 5.0)));
        const Vec z = sample_uniform_in_ball(rng, 3);
        CHECK(distance(f(f(z)), z) < 1e-10);
        const Vec s = sample_unit_direction(rng, 3);
        CHECK(std::abs(norm(f(s)) - 1.0) < 1e-10);
    }
}

TEST_CASE("hyperbolic distance is invariant under the automorphisms") {
    Rng rng(56);
    for (int dim : {2, 3}) {
        for (int i = 0; i < 2000; ++i) {
            const PointInBall a = rand_point(rng, dim), x = rand_point(rng, dim), y = rand_point(rng, dim);
            const double r = rho(x, y);
            CHECK(std::abs(rho(t_a(a, x), t_a(a, y)) - r) <= 1e-10 * std::max(1.0, r));
        }
    }
}

TEST_CASE("radii are increasing in their argument") {
    Rng rng(57);
    for (int i = 0; i < 300; ++i) {
        const PointInBall x = rand_point(rng, 2);
        const double cap = 1.0 - x.norm();
        const double r1 = cap * rng.uniform(0.01, 0.5), r2 = r1 + cap * rng.uniform(0.01, 0.45);
        const InclusionRadii a = euclidean_to_hilbert_radii(x, r1), b = euclidean_to_hilbert_radii(x, r2);
        CHECK(a.inner < b.inner);
        CHECK(a.outer < b.outer);
        CHECK(a.inner <= a.outer);
        const double l1 = rng.uniform(0.01, 3.0), l2 = l1 + rng.uniform(0.01, 1.0);
        const InclusionRadii c = hilbert_to_euclidean_radii(x, l1), d = hilbert_to_euclidean_radii(x, l2);
        CHECK(c.inner < d.inner);
        CHECK(c.outer < d.outer);
        CHECK(c.inner <= c.outer);
        const InclusionRadii e = hyperbolic_to_hilbert_radii(x, l1), f = hyperbolic_to_hilbert_radii(x, l2);
        CHECK(e.inner < f.inner);
        CHECK(e.inner <= e.outer);
    }
}

TEST_CASE("ball boundary level property for random centers") {
    Rng rng(58);
    for (int i = 0; i < 100; ++i) {
        const PointInBall x(scale(sample_uniform_in_ball(rng, 2), 0.95));
        const double l = rng.uniform(0.01, 4.0);
        for (const auto& s : hilbert_ball_boundary(x, l, 64).samples)
            CHECK(std::abs(hilbert_oracle(x, PointInBall(s.point)).value - l) < 1e-9);
    }
}

TEST_CASE("mu is decreasing and satisfies the product identity") {
    Rng rng(59);
    for (int i = 0; i < 1000; ++i) {
        const double big = rng.uniform(1.0 / std::sqrt(2.0), 1.0 - 1e-9);
        const double small = std::sqrt((1.0 - big) * (1.0 + big));
        CHECK(std::abs(mu(small) * mu(big) - 2.4674011002723396547) < 1e-12);
        const double r = rng.uniform(0.01, 0.98);
        CHECK(mu(r) > mu(r + 0.01));
    }
}
