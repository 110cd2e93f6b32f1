#pragma once

#include "hilbert_ball/geom_core.hpp"

namespace hball {

struct AgmResult {
    double value;
    int iterations;
};

/// Arithmetic-geometric mean of a, b > 0 to relative 1e-15.
AgmResult agm(double a, double b);

/// Complete elliptic integral of the first kind, K(r) = π / (2 AGM(1, sqrt(1 - r^2))), 0 <= r < 1.
double elliptic_k(double r);

/// K'(r) = K(sqrt(1 - r^2)) computed without forming sqrt(1 - r^2), 0 < r <= 1.
double elliptic_k_complement(double r);

/// Modulus of the Grötzsch ring, μ(r) = (π/2) K'(r) / K(r), 0 < r < 1.
double mu(double r);

/// r in (0, 1) with μ(r) = t.
double mu_inverse(double t);

/// Grötzsch capacity γ_2(s) = 2π / μ(1/s), s > 1.
double gamma2(double s);
double gamma2_inverse(double c);

/// Hersch-Pfluger distortion function: μ(φ_{K,2}(r)) = μ(r) / K.
double phi_k2(double K, double r);

/// λ(K) = (φ_{K,2}(1/√2) / φ_{1/K,2}(1/√2))^2, K >= 1.
double lambda_k(double K);

/// η_{K,2}(t) = φ^2 / (1 - φ^2) with φ = φ_{K,2}(sqrt(t / (1 + t))).
double eta_k2(double K, double t);

/// λ(K)^{1/2} max{S^K, S^{1/K}} with S = sh(ρ/2): bounds sh(ρ(f x, f y)/2)
/// for K-quasiregular self-maps of the disk.
double qr_sh_bound(double K, double rho_xy);

/// The Hilbert-metric version of the bound, with m1 = d(0, L(x, y)) and
/// m3 = d(0, L(f x, f y)).
double hilbert_qr_bound(double K, const PointInBall& x, const PointInBall& y, double m1, double m3);

} // namespace hball
