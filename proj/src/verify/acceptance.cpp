#include "hilbert_ball/verify.hpp"

#include "hilbert_ball/balls.hpp"
#include "hilbert_ball/error.hpp"
#include "hilbert_ball/lab.hpp"
#include "hilbert_ball/metrics.hpp"
#include "hilbert_ball/moebius.hpp"
#include "hilbert_ball/special_functions.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace hball::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// Tracks the worst deviation seen by a criterion.
struct MaxErr {
    double value = 0.0;
    void add(double e) {
        if (!(e <= value)) value = e; // NaN propagates as failure
    }
};

PointInBall rotate_to_norm(const PointInBall& y, double target) {
    return PointInBall(scale(y.coords(), target / y.norm()));
}

} // namespace

HilbertPaths HilbertPaths::library() {
    return {
        [](const PointInBall& x, const PointInBall& y) { return hilbert_oracle(x, y).value; },
        [](const PointInBall& x, const PointInBall& y) { return hilbert_ch_form(x, y).value; },
        [](const PointInBall& x, const PointInBall& y) { return hilbert_sh_identity(x, y).value; },
        [](const PointInBall& x, const PointInBall& y) { return hilbert_equal_norm(x, y).value; },
    };
}

CriterionResult sh_identity_criterion(const HilbertPaths& paths) {
    const auto t0 = Clock::now();
    CriterionResult r{1, "metrics", "sh identity vs cross-ratio oracle (1e5 pairs in B^2, 1e4 in B^5)", false, {}, 0};
    MaxErr err2, err5;
    Rng rng(1001);
    for (int i = 0; i < 100000; ++i) {
        const PointInBall x(sample_uniform_in_ball(rng, 2)), y(sample_uniform_in_ball(rng, 2));
        err2.add(std::abs(paths.sh(x, y) - paths.oracle(x, y)));
    }
    for (int i = 0; i < 10000; ++i) {
        const PointInBall x(sample_uniform_in_ball(rng, 5)), y(sample_uniform_in_ball(rng, 5));
        const PlaneFrame f = reduce_to_plane(x, y);
        err5.add(std::abs(paths.sh(f.project(x), f.project(y)) - paths.oracle(x, y)));
    }
    r.elapsed_s = seconds_since(t0);
    r.passed = err2.value < 1e-10 && err5.value < 1e-10 && r.elapsed_s < 10.0;
    r.detail = "max err B^2 " + fmt("%.3g", err2.value) + ", B^5 " + fmt("%.3g", err5.value) + ", " +
               fmt("%.2f", r.elapsed_s) + " s (limits 1e-10, 10 s)";
    return r;
}

CriterionResult four_way_agreement_criterion(const HilbertPaths& paths, int pairs) {
    const auto t0 = Clock::now();
    CriterionResult r{2, "metrics", "four-way Hilbert agreement (oracle / ch / sh / equal-norm)", false, {}, 0};
    MaxErr err, err_eq;
    Rng rng(1002);
    for (int i = 0; i < pairs; ++i) {
        const PointInBall x(sample_uniform_in_ball(rng, 2)), y(sample_uniform_in_ball(rng, 2));
        const double o = paths.oracle(x, y);
        err.add(std::abs(paths.ch(x, y) - o));
        err.add(std::abs(paths.sh(x, y) - o));
        if (y.is_origin() || x.is_origin()) continue;
        // Equal-norm companion pair: move y radially onto the sphere |y| = |x|.
        const PointInBall ye = rotate_to_norm(y, x.norm());
        if (distance(x.coords(), ye.coords()) < 1e-10) continue;
        const double oe = paths.oracle(x, ye);
        err_eq.add(std::abs(paths.equal_norm(x, ye) - oe));
        err_eq.add(std::abs(paths.ch(x, ye) - oe));
        err_eq.add(std::abs(paths.sh(x, ye) - oe));
    }
    r.elapsed_s = seconds_since(t0);
    r.passed = err.value < 1e-10 && err_eq.value < 1e-10;
    r.detail = "max err " + fmt("%.3g", err.value) + ", equal-norm pairs " + fmt("%.3g", err_eq.value) +
               " over " + std::to_string(pairs) + " pairs (limit 1e-10)";
    return r;
}

CriterionResult inequality_suite_criterion() {
    const auto t0 = Clock::now();
    CriterionResult r{3, "inequalities", "inequality suite, zero violations at 1e-9 over 1e5 samples each", true, {}, 0};
    const Check checks[] = {Check::cor3_7, Check::lemma2_3, Check::thm4_1,  Check::thm4_3,   Check::thm4_5,
                            Check::lemma5_1, Check::lemma5_4, Check::cor6_4, Check::cor6_5, Check::remark6_3};
    std::ostringstream os;
    std::uint64_t seed = 3000;
    for (Check c : checks) {
        SweepConfig cfg;
        cfg.check = c;
        cfg.samples = 100000;
        cfg.seed = seed++;
        cfg.tolerance = 1e-9;
        const SweepReport rep = run_sweep(cfg);
        if (rep.violations != 0) r.passed = false;
        os << to_string(c) << "=" << rep.violations;
        if (rep.skipped) os << " (skipped " << rep.skipped << ")";
        os << "; ";
    }
    r.elapsed_s = seconds_since(t0);
    r.detail = "violations: " + os.str();
    return r;
}

CriterionResult equality_cases_criterion() {
    const auto t0 = Clock::now();
    CriterionResult r{4, "equality", "equality cases to 1e-12 (with strict inequality after 1e-3 perturbation)", true, {}, 0};
    std::ostringstream os;
    for (Check c : checks_with_equality_case()) {
        const EqualityProbeReport rep = equality_case_probe(c);
        if (!rep.all_pass()) {
            r.passed = false;
            for (const auto& it : rep.items)
                if (!it.pass) os << to_string(c) << ": " << it.name << " failed; ";
        }
    }
    r.elapsed_s = seconds_since(t0);
    r.detail = r.passed ? "all probes pass" : os.str();
    return r;
}

CriterionResult disk_boundary_criterion() {
    const auto t0 = Clock::now();
    CriterionResult r{5, "balls", "Hilbert disk boundary, center 0.75, level 1.5, 512 samples", false, {}, 0};
    const PointInBall x(0.75, 0.0);
    const BallBoundary2D b = hilbert_ball_boundary(x, 1.5, 512);
    MaxErr level_err;
    for (const auto& s : b.samples) level_err.add(std::abs(hilbert_oracle(x, PointInBall(s.point)).value - 1.5));
    const Vec& left = b.samples[0].point;     // psi = 0
    const Vec& right = b.samples[256].point;  // psi = pi
    const double e_left = std::abs(left[0] - 0.21935) + std::abs(left[1]);
    const double e_right = std::abs(right[0] - 0.93822) + std::abs(right[1]);
    r.elapsed_s = seconds_since(t0);
    r.passed = level_err.value < 1e-9 && e_left < 5e-5 && e_right < 5e-5 && r.elapsed_s < 1.0;
    r.detail = "max |h - 1.5| " + fmt("%.3g", level_err.value) + ", axis points " + fmt("%.6f", left[0]) + " and " +
               fmt("%.6f", right[0]) + ", " + fmt("%.3f", r.elapsed_s) + " s";
    return r;
}

CriterionResult ball_inclusion_criterion() {
    const auto t0 = Clock::now();
    CriterionResult r{6, "balls", "Euclidean/Hilbert inclusion radii are tight (100 random centers)", false, {}, 0};
    MaxErr err;
    Rng rng(1006);
    for (int i = 0; i < 100; ++i) {
        const PointInBall x(sample_uniform_in_ball(rng, 2));
        const double rad = (1.0 - x.norm()) * rng.uniform(0.01, 0.99);
        const InclusionRadii l = euclidean_to_hilbert_radii(x, rad);
        const CircleExtrema e = hilbert_extrema_on_circle(x, rad, 2000);
        err.add(std::abs(e.min_h - l.inner));
        err.add(std::abs(e.max_h - l.outer));
    }
    r.elapsed_s = seconds_since(t0);
    r.passed = err.value < 1e-6;
    r.detail = "max |extremum - bound| " + fmt("%.3g", err.value) + " (limit 1e-6)";
    return r;
}

CriterionResult special_functions_criterion() {
    const auto t0 = Clock::now();
    CriterionResult r{7, "special", "elliptic stack: K, mu, phi, lambda identities", true, {}, 0};
    std::ostringstream os;
    constexpr double pi = std::numbers::pi;
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) {
            r.passed = false;
            os << what << " failed; ";
        }
    };
    require(std::abs(elliptic_k(0.0) - pi / 2) < 1e-13, "K(0) = pi/2");
    require(std::abs(mu(1.0 / std::sqrt(2.0)) - pi / 2) < 1e-13, "mu(1/sqrt2) = pi/2");
    MaxErr mu_err, phi_err;
    Rng rng(1007);
    for (int i = 0; i < 1000; ++i) {
        // The larger modulus is drawn and the smaller derived from it; the other way
        // round, rounding the complement near 1 alone moves the product by ~1e-11.
        const double big = rng.uniform(1.0 / std::sqrt(2.0), 1.0 - 1e-9);
        const double small = std::sqrt((1.0 - big) * (1.0 + big));
        mu_err.add(std::abs(mu(small) * mu(big) - pi * pi / 4));
        const double s = rng.uniform(1e-6, 1.0 - 1e-6);
        phi_err.add(std::abs(phi_k2(1.0, s) - s));
    }
    require(mu_err.value < 1e-12, "mu(r) mu(r') = pi^2/4 (" + fmt("%.3g", mu_err.value) + ")");
    require(phi_err.value < 1e-12, "phi_{1,2} = id");
    require(lambda_k(1.0) == 1.0, "lambda(1) = 1");
    for (double K : {1.1, 1.5, 2.0, 3.0, 4.0})
        require(lambda_k(K) < std::exp(pi * (K - 1.0 / K)), "lambda(" + fmt("%g", K) + ") < e^{pi(K-1/K)}");
    const double quad = elliptic_k_quadrature(0.5, 64);
    require(std::abs(elliptic_k(0.5) - quad) < 1e-12, "K(0.5) vs 64-point quadrature");
    r.elapsed_s = seconds_since(t0);
    r.detail = r.passed ? "all identities hold; mu product err " + fmt("%.3g", mu_err.value) +
                              ", |K(0.5) - quadrature| " + fmt("%.3g", std::abs(elliptic_k(0.5) - quad))
                        : os.str();
    return r;
}

CriterionResult moebius_criterion() {
    const auto t0 = Clock::now();
    CriterionResult r{8, "moebius", "Moebius suite: rho invariance, distortion identity, m2 form, symmetrization", false, {}, 0};
    MaxErr rho_err, m2_err, sym_norm, sym_h;
    Rng rng(1008);
    for (int i = 0; i < 100000; ++i) {
        const PointInBall a(sample_uniform_in_ball(rng, 2)), x(sample_uniform_in_ball(rng, 2)),
            y(sample_uniform_in_ball(rng, 2));
        const double rxy = rho(x, y);
        rho_err.add(std::abs(rho(t_a(a, x), t_a(a, y)) - rxy) / std::max(1.0, rxy));
        if (i < 10000) {
            const PointInBall tx = t_a(a, x), ty = t_a(a, y);
            m2_err.add(std::abs(m2_complex_form(a, x, y) - perpendicular_foot_distance(tx.coords(), ty.coords())));
        }
    }

    SweepConfig cfg;
    cfg.check = Check::cor6_1;
    cfg.samples = 100000;
    cfg.seed = 1018;
    cfg.tolerance = 1e-10;
    const SweepReport dist = run_sweep(cfg);

    int pairs = 0;
    while (pairs < 10000) {
        const PointInBall x(sample_uniform_in_ball(rng, 2)), y(sample_uniform_in_ball(rng, 2));
        if (std::abs(x.norm() - y.norm()) <= 1e-12) continue;
        ++pairs;
        const SphereInversion f = symmetrizing_inversion(x, y);
        const PointInBall fx = f(x), fy = f(y);
        sym_norm.add(std::abs(fx.norm() - fy.norm()));
        sym_h.add(std::abs(hilbert(fx, fy) - hilbert(x, y)));
    }

    r.elapsed_s = seconds_since(t0);
    r.passed = rho_err.value < 1e-10 && dist.violations == 0 && m2_err.value < 1e-9 && sym_norm.value < 1e-10 &&
               sym_h.value < 1e-10;
    r.detail = "rho err " + fmt("%.3g", rho_err.value) + ", distortion identity violations " +
               std::to_string(dist.violations) + ", m2 err " + fmt("%.3g", m2_err.value) + ", symmetrized norm gap " +
               fmt("%.3g", sym_norm.value) + ", h drift " + fmt("%.3g", sym_h.value);
    return r;
}

CriterionResult quasiregular_criterion() {
    const auto t0 = Clock::now();
    CriterionResult r{9, "qr", "quasiregular bound for T_a and z^2 at K = 1", false, {}, 0};
    SweepConfig cfg;
    cfg.check = Check::thm6_7;
    cfg.samples = 10000;
    cfg.seed = 1009;
    cfg.tolerance = 1e-10;
    const SweepReport rep = run_sweep(cfg);

    MaxErr eq;
    Rng rng(1019);
    for (int i = 0; i < 10000; ++i) {
        const PointInBall a(sample_uniform_in_ball(rng, 2)), x(sample_uniform_in_ball(rng, 2)),
            y(sample_uniform_in_ball(rng, 2));
        const double bound = qr_sh_bound(1.0, rho(x, y));
        eq.add(std::abs(std::sinh(0.5 * rho(t_a(a, x), t_a(a, y))) - bound) / std::max(1.0, bound));
    }
    r.elapsed_s = seconds_since(t0);
    r.passed = rep.violations == 0 && eq.value < 1e-10;
    r.detail = "violations " + std::to_string(rep.violations) + ", T_a equality err " + fmt("%.3g", eq.value);
    return r;
}

CriterionResult conjecture_criterion() {
    const auto t0 = Clock::now();
    CriterionResult r{10, "conjecture", "conjecture h(T_a x, T_a y) <= (1+|a|) h(x, y), 1e6 boundary-biased samples",
                      false, {}, 0};
    SweepConfig cfg;
    cfg.check = Check::conjecture_1_plus_a;
    cfg.samples = 1000000;
    cfg.seed = 42;
    cfg.tolerance = 1e-9;
    const SweepReport rep = run_sweep(cfg);
    bool replay_ok = false;
    if (rep.witness) replay_ok = std::abs(replay_ratio(cfg.check, rep.witness->sample) - rep.max_ratio) <= 1e-12;
    r.elapsed_s = seconds_since(t0);
    r.passed = rep.violations == 0 && rep.max_ratio < 1.0 && replay_ok && r.elapsed_s < 60.0;
    r.detail = rep.verdict() + "; max ratio " + fmt("%.6f", rep.max_ratio) + ", witness replay " +
               (replay_ok ? "ok" : "MISMATCH") + ", " + fmt("%.1f", rep.elapsed_s) + " s";
    if (rep.witness) r.detail += "; witness " + to_json(rep.witness->sample).dump();
    return r;
}

CriterionResult unboundedness_criterion() {
    const auto t0 = Clock::now();
    CriterionResult r{11, "unboundedness", "targeted probes exhibit rho/h > 100 and j/h > 100", false, {}, 0};
    double maxima[2] = {0, 0};
    int k = 0;
    for (Check c : {Check::unboundedness_rho_over_h, Check::unboundedness_j_over_h}) {
        SweepConfig cfg;
        cfg.check = c;
        cfg.samples = 10000;
        cfg.seed = 1011;
        maxima[k++] = run_sweep(cfg).max_ratio;
    }
    r.elapsed_s = seconds_since(t0);
    r.passed = maxima[0] > kProbeThreshold && maxima[1] > kProbeThreshold;
    r.detail = "max rho/h " + fmt("%.4g", maxima[0]) + ", max j/h " + fmt("%.4g", maxima[1]);
    return r;
}

const std::vector<CriterionEntry>& acceptance_criteria() {
    static const std::vector<CriterionEntry> entries{
        {1, "metrics", [] { return sh_identity_criterion(); }},
        {2, "metrics", [] { return four_way_agreement_criterion(); }},
        {3, "inequalities", inequality_suite_criterion},
        {4, "equality", equality_cases_criterion},
        {5, "balls", disk_boundary_criterion},
        {6, "balls", ball_inclusion_criterion},
        {7, "special", special_functions_criterion},
        {8, "moebius", moebius_criterion},
        {9, "qr", quasiregular_criterion},
        {10, "conjecture", conjecture_criterion},
        {11, "unboundedness", unboundedness_criterion},
    };
    return entries;
}

CriterionResult run_criterion(const CriterionEntry& e) {
    try {
        return e.run();
    } catch (const std::exception& ex) {
        CriterionResult r;
        r.id = e.id;
        r.group = e.group;
        r.name = "criterion " + std::to_string(e.id);
        r.detail = std::string("exception: ") + ex.what();
        return r;
    }
}

std::vector<CriterionResult> run_acceptance(const std::string& only) {
    std::vector<CriterionResult> out;
    for (const auto& e : acceptance_criteria())
        if (only.empty() || e.group == only) out.push_back(run_criterion(e));
    return out;
}

std::string format_result_line(const CriterionResult& r) {
    char head[32];
    std::snprintf(head, sizeof head, "[%s] %2d ", r.passed ? "PASS" : "FAIL", r.id);
    return std::string(head) + r.name + " -- " + r.detail;
}

} // namespace hball::verify
