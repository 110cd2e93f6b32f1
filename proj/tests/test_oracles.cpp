#include "hilbert_ball/metrics.hpp"
#include "hilbert_ball/special_functions.hpp"
#include "hilbert_ball/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hball;
using namespace hball::verify;
using doctest::Approx;

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
    const QuadratureRule q = gauss_legendre(8);
    REQUIRE(q.nodes.size() == 8);
    double w = 0, p14 = 0, p15 = 0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        w += q.weights[i];
        p14 += q.weights[i] * std::pow(q.nodes[i], 14);
        p15 += q.weights[i] * std::pow(q.nodes[i], 15);
    }
    CHECK(w == Approx(2.0).epsilon(1e-15));
    CHECK(p14 == Approx(2.0 / 15.0).epsilon(1e-14));
    CHECK(std::abs(p15) < 1e-15);
}

TEST_CASE("quadrature K agrees with known values") {
    CHECK(elliptic_k_quadrature(0.0) == Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(elliptic_k_quadrature(0.5) == Approx(1.68575035481259604287).epsilon(1e-14));
}

TEST_CASE("circle extrema oracle") {
    // around the origin h is constant on Euclidean circles
    const CircleExtrema e = hilbert_extrema_on_circle(PointInBall(0.0, 0.0), 0.5, 1000);
    CHECK(e.min_h == Approx(std::log(3.0)).epsilon(1e-13));
    CHECK(e.max_h == Approx(std::log(3.0)).epsilon(1e-13));
    const CircleExtrema r = hilbert_extrema_on_hyperbolic_circle(PointInBall(0.0, 0.0), 1.0, 1000);
    CHECK(r.min_h == Approx(1.0).epsilon(1e-12));
    CHECK(r.max_h == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("perpendicular foot distance") {
    CHECK(perpendicular_foot_distance(Vec{0.5, 0.0}, Vec{0.0, 0.5}) ==
          Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
    CHECK(perpendicular_foot_distance(Vec{0.2, 0.2, 0.0}, Vec{0.4, 0.4, 0.0}) < 1e-15);
}

TEST_CASE("agreement criteria pass on the library paths") {
    CHECK(sh_identity_criterion().passed);
    CHECK(four_way_agreement_criterion(HilbertPaths::library(), 5000).passed);
}

TEST_CASE("mutation smoke test: a sign error in m1 is flagged") {
    HilbertPaths broken = HilbertPaths::library();
    broken.sh = [](const PointInBall& x, const PointInBall& y) {
        if (x == y) return 0.0;
        const double m1 = dist_origin_to_line(x, y);
        return 2.0 * std::asinh(std::sqrt((1.0 - m1) * (1.0 - m1)) * std::sinh(0.5 * rho(x, y)));
    };
    const CriterionResult a = four_way_agreement_criterion(broken, 2000);
    CHECK_FALSE(a.passed);
    CHECK_FALSE(sh_identity_criterion(broken).passed);
}

TEST_CASE("mutation smoke test: a sign error in the ch form is flagged") {
    HilbertPaths broken = HilbertPaths::library();
    broken.ch = [](const PointInBall& x, const PointInBall& y) {
        if (x == y) return 0.0;
        const double s = std::sqrt(x.conorm2() * y.conorm2());
        return 2.0 * std::acosh(std::max(1.0, (1.0 + dot(x.coords(), y.coords())) / s));
    };
    CHECK_FALSE(four_way_agreement_criterion(broken, 2000).passed);
}

TEST_CASE("result lines") {
    CriterionResult r;
    r.id = 3;
    r.name = "demo";
    r.detail = "ok";
    r.passed = true;
    CHECK(format_result_line(r) == "[PASS]  3 demo -- ok");
    r.passed = false;
    CHECK(format_result_line(r).rfind("[FAIL]", 0) == 0);
    CHECK(acceptance_criteria().size() == 11);
}
