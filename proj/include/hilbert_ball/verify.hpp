#pragma once

#include "hilbert_ball/geom_core.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hball::verify {

// Independent oracles. None of these share code paths with the functions they check.

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n);

/// K(r) by quadrature of the defining integral after x = sin(theta).
double elliptic_k_quadrature(double r, int points = 64);

struct CircleExtrema {
    double min_h;
    double max_h;
};

/// Brute-force extrema of h(x, y) over y on the Euclidean circle S^1(x, r),
/// refined with golden-section search around the best samples.
CircleExtrema hilbert_extrema_on_circle(const PointInBall& x, double r, int samples = 10000);

/// Same over the hyperbolic circle S_rho(x, r).
CircleExtrema hilbert_extrema_on_hyperbolic_circle(const PointInBall& x, double r, int samples = 10000);

/// Distance from 0 to L(x, y) via the foot of the perpendicular.
double perpendicular_foot_distance(std::span<const double> x, std::span<const double> y);

// Acceptance criteria.

struct CriterionResult {
    int id = 0;
    std::string group;
    std::string name;
    bool passed = false;
    std::string detail;
    double elapsed_s = 0.0;
};

using PairFn = std::function<double(const PointInBall&, const PointInBall&)>;

/// The Hilbert evaluation paths compared by the agreement criteria. Tests swap
/// entries for deliberately broken versions.
struct HilbertPaths {
    PairFn oracle;
    PairFn ch;
    PairFn sh;
    PairFn equal_norm;
    static HilbertPaths library();
};

CriterionResult sh_identity_criterion(const HilbertPaths& paths = HilbertPaths::library());
CriterionResult four_way_agreement_criterion(const HilbertPaths& paths = HilbertPaths::library(),
                                             int pairs = 100000);
CriterionResult inequality_suite_criterion();
CriterionResult equality_cases_criterion();
CriterionResult disk_boundary_criterion();
CriterionResult ball_inclusion_criterion();
CriterionResult special_functions_criterion();
CriterionResult moebius_criterion();
CriterionResult quasiregular_criterion();
CriterionResult conjecture_criterion();
CriterionResult unboundedness_criterion();

struct CriterionEntry {
    int id;
    std::string group;
    std::function<CriterionResult()> run;
};

const std::vector<CriterionEntry>& acceptance_criteria();

/// Runs one criterion; an escaping exception becomes a failure.
CriterionResult run_criterion(const CriterionEntry& e);

/// Groups accepted by `only`: metrics, inequalities, equality, balls, special,
/// moebius, qr, conjecture, unboundedness. Empty runs everything.
std::vector<CriterionResult> run_acceptance(const std::string& only = {});

std::string format_result_line(const CriterionResult& r);

} // namespace hball::verify
