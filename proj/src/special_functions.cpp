#include "hilbert_ball/special_functions.hpp"

#include "hilbert_ball/error.hpp"
#include "hilbert_ball/metrics.hpp"
#include "hilbert_ball/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hball {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLemniscatic = std::numbers::sqrt2 / 2.0;
constexpr double kMuLo = 1e-15;

// μ from a modulus and its complement, so callers near r = 1 keep precision.
double mu_pair(double r, double rc) { return 0.5 * kPi * agm(1.0, rc).value / agm(1.0, r).value; }

// Solves μ(r) = t for t >= π/2, i.e. r in (0, 1/√2].
double mu_inverse_lower(double t) {
    return bisect_increasing([t](double r) { return t - mu(r); }, kMuLo, kLemniscatic, 0.0);
}

void require_k(double K, double min_k, const char* what) {
    if (!(K >= min_k) || !std::isfinite(K)) throw GeometryError(ErrorKind::ArgumentOutOfRange, what);
}

} // namespace

AgmResult agm(double a, double b) {
    int it = 0;
    while (std::abs(a - b) > 1e-15 * a && it < 64) {
        const double next = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = next;
        ++it;
    }
    return {0.5 * (a + b), it};
}

double elliptic_k(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw GeometryError(ErrorKind::ModulusOutOfRange, "K(r) needs 0 <= r < 1");
    return 0.5 * kPi / agm(1.0, std::sqrt((1.0 - r) * (1.0 + r))).value;
}

double elliptic_k_complement(double r) {
    if (!(r > 0.0 && r <= 1.0)) throw GeometryError(ErrorKind::ModulusOutOfRange, "K'(r) needs 0 < r <= 1");
    return 0.5 * kPi / agm(1.0, r).value;
}

double mu(double r) {
    if (!(r > 0.0 && r < 1.0)) throw GeometryError(ErrorKind::ModulusOutOfRange, "mu(r) needs 0 < r < 1");
    return 0.5 * kPi * elliptic_k_complement(r) / elliptic_k(r);
}

double mu_inverse(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw GeometryError(ErrorKind::ArgumentOutOfRange, "mu_inverse needs t > 0");
    if (t >= 0.5 * kPi) return mu_inverse_lower(t);
    // μ(r) μ(r') = π²/4: solve for the complementary modulus instead.
    const double rc = mu_inverse_lower(0.25 * kPi * kPi / t);
    return std::min(std::sqrt((1.0 - rc) * (1.0 + rc)), 1.0 - kMuLo);
}

double gamma2(double s) {
    if (!(s > 1.0)) throw GeometryError(ErrorKind::ArgumentOutOfRange, "gamma2 needs s > 1");
    return 2.0 * kPi / mu(1.0 / s);
}

double gamma2_inverse(double c) {
    if (!(c > 0.0)) throw GeometryError(ErrorKind::ArgumentOutOfRange, "gamma2_inverse needs c > 0");
    return 1.0 / mu_inverse(2.0 * kPi / c);
}

double phi_k2(double K, double r) {
    if (!(K > 0.0) || !std::isfinite(K)) throw GeometryError(ErrorKind::ArgumentOutOfRange, "phi needs K > 0");
    if (!(r > 0.0 && r < 1.0)) throw GeometryError(ErrorKind::ArgumentOutOfRange, "phi needs 0 < r < 1");
    if (K == 1.0) return r;
    return mu_inverse(mu(r) / K);
}

double lambda_k(double K) {
    require_k(K, 1.0, "lambda needs K >= 1");
    if (K == 1.0) return 1.0;
    const double ratio = phi_k2(K, kLemniscatic) / phi_k2(1.0 / K, kLemniscatic);
    return ratio * ratio;
}

double eta_k2(double K, double t) {
    require_k(K, 1.0, "eta needs K >= 1");
    if (!(t >= 0.0) || !std::isfinite(t)) throw GeometryError(ErrorKind::ArgumentOutOfRange, "eta needs t >= 0");
    if (t == 0.0) return 0.0;
    const double s = std::sqrt(t / (1.0 + t));
    if (K == 1.0) return s * s / (1.0 - s * s);
    const double mu_s = mu_pair(s, 1.0 / std::sqrt(1.0 + t));
    // φ and its complement φ' = sqrt(1 - φ^2), both by inversion of μ.
    const double phi = mu_inverse(mu_s / K);
    const double phi_c = mu_inverse(0.25 * kPi * kPi * K / mu_s);
    return (phi / phi_c) * (phi / phi_c);
}

double qr_sh_bound(double K, double rho_xy) {
    require_k(K, 1.0, "qr bound needs K >= 1");
    if (!(rho_xy >= 0.0)) throw GeometryError(ErrorKind::ArgumentOutOfRange, "rho must be nonnegative");
    const double S = std::sinh(0.5 * rho_xy);
    if (K == 1.0) return S;
    return std::sqrt(lambda_k(K)) * std::max(std::pow(S, K), std::pow(S, 1.0 / K));
}

double hilbert_qr_bound(double K, const PointInBall& x, const PointInBall& y, double m1, double m3) {
    require_k(K, 1.0, "qr bound needs K >= 1");
    require_same_dim(x, y);
    if (distance(x.coords(), y.coords()) <= 1e-14)
        throw GeometryError(ErrorKind::CoincidentPoints, "qr bound of coincident points");
    if (!(m1 >= 0.0 && m1 < 1.0 && m3 >= 0.0 && m3 < 1.0))
        throw GeometryError(ErrorKind::ArgumentOutOfRange, "m1, m3 must lie in [0, 1)");
    const double q = std::sinh(0.5 * hilbert(x, y)) / std::sqrt((1.0 - m1) * (1.0 + m1));
    const double spread = K == 1.0 ? q : std::max(std::pow(q, K), std::pow(q, 1.0 / K));
    return std::sqrt(lambda_k(K)) * std::sqrt((1.0 - m3) * (1.0 + m3)) * spread;
}

} // namespace hball
