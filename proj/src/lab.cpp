#include "hilbert_ball/lab.hpp"

#include "hilbert_ball/balls.hpp"
#include "hilbert_ball/error.hpp"
#include "hilbert_ball/metrics.hpp"
#include "hilbert_ball/moebius.hpp"
#include "hilbert_ball/special_functions.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

namespace hball {

namespace {

constexpr std::uint64_t kChunkSize = 1024;
constexpr int kMaxRedraws = 1000;

struct CheckInfo {
    Check check;
    std::string_view name;
    CheckKind kind;
};

constexpr CheckInfo kChecks[] = {
    {Check::thm4_1, "thm4_1", CheckKind::theorem},
    {Check::cor3_7, "cor3_7", CheckKind::theorem},
    {Check::lemma2_3, "lemma2_3", CheckKind::theorem},
    {Check::thm4_3, "thm4_3", CheckKind::theorem},
    {Check::thm4_5, "thm4_5", CheckKind::theorem},
    {Check::lemma5_1, "lemma5_1", CheckKind::theorem},
    {Check::lemma5_4, "lemma5_4", CheckKind::theorem},
    {Check::cor6_1, "cor6_1", CheckKind::theorem},
    {Check::cor6_4, "cor6_4", CheckKind::theorem},
    {Check::cor6_5, "cor6_5", CheckKind::theorem},
    {Check::remark6_3, "remark6_3", CheckKind::theorem},
    {Check::conjecture_1_plus_a, "conjecture_1_plus_a", CheckKind::conjecture},
    {Check::thm6_7, "thm6_7", CheckKind::theorem},
    {Check::unboundedness_rho_over_h, "unboundedness_rho_over_h", CheckKind::probe},
    {Check::unboundedness_j_over_h, "unboundedness_j_over_h", CheckKind::probe},
};

const CheckInfo& info(Check c) {
    for (const auto& ci : kChecks)
        if (ci.check == c) return ci;
    throw GeometryError(ErrorKind::ArgumentOutOfRange, "unknown check");
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// lhs <= rhs, with the margin measured relative to max(1, |rhs|).
Outcome upper_check(double lhs, double rhs, double tol) {
    Outcome o;
    o.ratio = lhs / rhs;
    o.margin = (lhs - rhs) / std::max(1.0, std::abs(rhs));
    o.violated = o.margin > tol;
    o.near_tolerance = !o.violated && o.margin > 0.01 * tol;
    return o;
}

Outcome both(const Outcome& p, const Outcome& q) {
    Outcome o;
    o.ratio = std::max(p.ratio, q.ratio);
    o.margin = std::max(p.margin, q.margin);
    o.violated = p.violated || q.violated;
    o.near_tolerance = !o.violated && (p.near_tolerance || q.near_tolerance);
    return o;
}

Outcome skipped_outcome() {
    Outcome o;
    o.skipped = true;
    return o;
}

Outcome bracket(double lower, double value, double upper, bool upper_finite, double tol) {
    const Outcome lo = upper_check(lower, value, tol);
    if (!upper_finite) return lo;
    return both(lo, upper_check(value, upper, tol));
}

PointInBall square(const PointInBall& z) {
    const Complex c = z.to_complex() * z.to_complex();
    return PointInBall::with_conorm2(Vec{c.real(), c.imag()}, z.conorm2() * (1.0 + z.norm2()));
}

void require_distinct(const PointInBall& x, const PointInBall& y) {
    if (distance(x.coords(), y.coords()) < 1e-10)
        throw GeometryError(ErrorKind::CoincidentPoints, "sample pair closer than 1e-10");
}

Vec mixed_point(Rng& rng, int dim) {
    return rng.uniform() < 0.5 ? sample_uniform_in_ball(rng, dim) : sample_boundary_biased(rng, dim);
}

} // namespace

std::string_view to_string(Check c) { return info(c).name; }

CheckKind kind_of(Check c) { return info(c).kind; }

std::string_view to_string(CheckKind k) {
    switch (k) {
    case CheckKind::theorem: return "theorem";
    case CheckKind::conjecture: return "conjecture";
    case CheckKind::probe: return "probe";
    }
    return "unknown";
}


std::optional<Check> parse_check(std::string_view name) {
    for (const auto& ci : kChecks)
        if (ci.name == name) return ci.check;
    return std::nullopt;
}

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = [] {
        std::vector<Check> v;
        for (const auto& ci : kChecks) v.push_back(ci.check);
        return v;
    }();
    return checks;
}

Rng Rng::for_chunk(std::uint64_t seed, std::uint64_t chunk) {
    return Rng(splitmix64(splitmix64(seed) ^ (chunk * 0xd1b54a32d192ed03ULL + 1)));
}

Vec sample_uniform_in_ball(Rng& rng, int dim) {
    Vec p(static_cast<std::size_t>(dim));
    for (;;) {
        for (double& c : p) c = rng.uniform(-1.0, 1.0);
        const double n = norm(p);
        if (1.0 - n >= kBoundaryEps) return p;
    }
}

Vec sample_unit_direction(Rng& rng, int dim) {
    Vec p(static_cast<std::size_t>(dim));
    for (;;) {
        for (double& c : p) c = rng.uniform(-1.0, 1.0);
        const double n2 = norm2(p);
        if (n2 > 1e-4 && n2 <= 1.0) return scale(p, 1.0 / std::sqrt(n2));
    }
}

Vec sample_boundary_biased(Rng& rng, int dim) {
    const double u = rng.uniform(1.0, 8.0);
    return scale(sample_unit_direction(rng, dim), 1.0 - std::pow(10.0, -u));
}

Sample draw_sample(Check check, Rng& rng, int dim, std::uint64_t index) {
    Sample s;
    switch (check) {
    case Check::thm4_1:
    case Check::cor3_7:
    case Check::lemma2_3:
    case Check::thm4_3:
    case Check::thm4_5:
        s.x = sample_uniform_in_ball(rng, dim);
        s.y = sample_uniform_in_ball(rng, dim);
        break;
    case Check::lemma5_1: {
        s.x = sample_uniform_in_ball(rng, dim);
        s.radius = rng.uniform() * (1.0 - norm(s.x));
        s.y = axpy(s.x, s.radius, sample_unit_direction(rng, dim));
        break;
    }
    case Check::lemma5_4: {
        s.x = sample_uniform_in_ball(rng, dim);
        s.radius = 4.0 * (1.0 - rng.uniform());
        const PointInBall w(scale(sample_unit_direction(rng, dim), std::tanh(0.5 * s.radius)));
        // T_{-x} moves 0 to x and is a hyperbolic isometry.
        s.y = t_a(PointInBall(scale(s.x, -1.0)), w).vec();
        break;
    }
    case Check::cor6_1:
    case Check::cor6_4:
    case Check::remark6_3:
        s.a = sample_uniform_in_ball(rng, dim);
        s.x = sample_uniform_in_ball(rng, dim);
        s.y = sample_uniform_in_ball(rng, dim);
        break;
    case Check::cor6_5: {
        s.a = sample_uniform_in_ball(rng, dim);
        const double half = 0.5 * norm(s.a);
        s.x = scale(sample_uniform_in_ball(rng, dim), half);
        s.y = scale(sample_uniform_in_ball(rng, dim), half);
        break;
    }
    case Check::conjecture_1_plus_a:
        s.a = mixed_point(rng, dim);
        s.x = mixed_point(rng, dim);
        s.y = mixed_point(rng, dim);
        break;
    case Check::thm6_7:
        s.a = sample_uniform_in_ball(rng, 2);
        s.x = sample_uniform_in_ball(rng, 2);
        s.y = sample_uniform_in_ball(rng, 2);
        s.variant = static_cast<int>(index % 2);
        break;
    case Check::unboundedness_rho_over_h:
    case Check::unboundedness_j_over_h: {
        // A short chord segment centered at distance m from 0, m close to 1.
        const double m = 1.0 - std::pow(10.0, -rng.uniform(1.0, 8.0));
        const Vec normal = sample_unit_direction(rng, dim);
        Vec tangent;
        do {
            tangent = sample_unit_direction(rng, dim);
            tangent = axpy(tangent, -dot(tangent, normal), normal);
        } while (norm(tangent) < 1e-3);
        tangent = scale(tangent, 1.0 / norm(tangent));
        const double half = 0.5 * std::pow(10.0, -rng.uniform(0.0, 3.0)) * std::sqrt((1.0 - m) * (1.0 + m));
        const Vec foot = scale(normal, m);
        s.x = axpy(foot, half, tangent);
        s.y = axpy(foot, -half, tangent);
        break;
    }
    }
    return s;
}

Outcome evaluate_sample(Check check, const Sample& s, double tol) {
    const PointInBall x(s.x);
    const PointInBall y(s.y);
    require_distinct(x, y);

    Outcome o;
    switch (check) {
    case Check::thm4_1:
        o = upper_check(hilbert(x, y), 2.0 * jdist(x, y), tol);
        break;
    case Check::cor3_7:
        o = upper_check(hilbert(x, y), rho(x, y), tol);
        break;
    case Check::lemma2_3: {
        const double j = jdist(x, y), r = rho(x, y);
        o = both(upper_check(j, r, tol), upper_check(r, 2.0 * j, tol));
        break;
    }
    case Check::thm4_3: {
        const BoundPair b = rotation_bounds_far_point(x, y);
        o = bracket(b.lower, hilbert(x, y), b.upper, b.upper_finite, tol);
        break;
    }
    case Check::thm4_5: {
        const BoundPair b = midpoint_rotation_bounds(x, y);
        o = bracket(b.lower, hilbert(x, y), b.upper, b.upper_finite, tol);
        break;
    }
    case Check::lemma5_1: {
        const InclusionRadii l = euclidean_to_hilbert_radii(x, s.radius);
        o = bracket(l.inner, hilbert(x, y), l.outer, true, tol);
        break;
    }
    case Check::lemma5_4: {
        const InclusionRadii l = hyperbolic_to_hilbert_radii(x, s.radius);
        o = bracket(l.inner, hilbert(x, y), l.outer, true, tol);
        break;
    }
    case Check::cor6_1: {
        const PointInBall a(s.a);
        const double direct = hilbert_oracle(t_a(a, x), t_a(a, y)).value;
        const double identity = distortion_identity(a, x, y);
        o.ratio = direct / identity;
        o.margin = std::abs(direct - identity) / std::max(1.0, identity);
        o.violated = o.margin > tol;
        o.near_tolerance = !o.violated && o.margin > 0.01 * tol;
        break;
    }
    case Check::cor6_4: {
        const PointInBall a(s.a);
        o = upper_check(hilbert(t_a(a, x), t_a(a, y)), distortion_upper_bounds(a, x, y).minxy_bound, tol);
        break;
    }
    case Check::cor6_5: {
        const PointInBall a(s.a);
        const DistortionBounds b = distortion_upper_bounds(a, x, y);
        if (!b.half_a_bound) return skipped_outcome();
        o = both(upper_check(hilbert(t_a(a, x), t_a(a, y)), *b.half_a_bound, tol),
                 upper_check(b.minxy_bound, *b.half_a_bound, tol));
        break;
    }
    case Check::remark6_3: {
        const PointInBall a(s.a);
        const DistortionBounds b = distortion_upper_bounds(a, x, y);
        if (!b.linear_valid) return skipped_outcome();
        o = upper_check(hilbert(t_a(a, x), t_a(a, y)), b.linear_bound, tol);
        break;
    }
    case Check::conjecture_1_plus_a: {
        const PointInBall a(s.a);
        o = upper_check(hilbert(t_a(a, x), t_a(a, y)), (1.0 + a.norm()) * hilbert(x, y), tol);
        break;
    }
    case Check::thm6_7: {
        const PointInBall a(s.a);
        const PointInBall fx = s.variant == 0 ? t_a(a, x) : square(x);
        const PointInBall fy = s.variant == 0 ? t_a(a, y) : square(y);
        o = upper_check(std::sinh(0.5 * rho(fx, fy)), qr_sh_bound(1.0, rho(x, y)), tol);
        break;
    }
    case Check::unboundedness_rho_over_h:
        o.ratio = rho(x, y) / hilbert(x, y);
        break;
    case Check::unboundedness_j_over_h:
        o.ratio = jdist(x, y) / hilbert(x, y);
        break;
    }
    if (!std::isfinite(o.ratio))
        throw GeometryError(ErrorKind::DegenerateConfiguration, "non-finite ratio");
    return o;
}

double replay_ratio(Check check, const Sample& s) { return evaluate_sample(check, s, 1e-9).ratio; }

namespace {

struct ChunkResult {
    std::uint64_t violations = 0, warnings = 0, resampled = 0, skipped = 0;
    double max_ratio = -std::numeric_limits<double>::infinity();
    std::optional<Witness> best;
    std::optional<Witness> first_violation;
};

ChunkResult run_chunk(const SweepConfig& cfg, std::uint64_t chunk) {
    ChunkResult r;
    Rng rng = Rng::for_chunk(cfg.seed, chunk);
    const std::uint64_t begin = chunk * kChunkSize;
    const std::uint64_t end = std::min(cfg.samples, begin + kChunkSize);
    for (std::uint64_t i = begin; i < end; ++i) {
        std::optional<Outcome> out;
        Sample s;
        for (int attempt = 0; attempt < kMaxRedraws && !out; ++attempt) {
            s = draw_sample(cfg.check, rng, cfg.dimension, i);
            try {
                out = evaluate_sample(cfg.check, s, cfg.tolerance);
            } catch (const GeometryError&) {
                ++r.resampled;
            }
        }
        if (!out || out->skipped) {
            ++r.skipped;
            continue;
        }
        if (out->violated) {
            ++r.violations;
            if (!r.first_violation) r.first_violation = Witness{i, s, out->ratio};
        }
        if (out->near_tolerance) ++r.warnings;
        if (out->ratio > r.max_ratio) {
            r.max_ratio = out->ratio;
            r.best = Witness{i, s, out->ratio};
        }
    }
    return r;
}

unsigned resolve_threads(const SweepConfig& cfg, std::uint64_t chunks) {
    unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HILBERT_BALL_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
    }
    return static_cast<unsigned>(std::min<std::uint64_t>(n, std::max<std::uint64_t>(1, chunks)));
}

} // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
    if (cfg.samples < 1) throw GeometryError(ErrorKind::ArgumentOutOfRange, "samples must be >= 1");
    if (!(cfg.tolerance > 0.0)) throw GeometryError(ErrorKind::ArgumentOutOfRange, "tolerance must be > 0");
    if (cfg.dimension < 2) throw GeometryError(ErrorKind::ArgumentOutOfRange, "dimension must be >= 2");
    if (cfg.check == Check::thm6_7 && cfg.dimension != 2)
        throw GeometryError(ErrorKind::ArgumentOutOfRange, "thm6_7 is planar");

    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t chunks = (cfg.samples + kChunkSize - 1) / kChunkSize;
    std::vector<ChunkResult> results(chunks);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) results[c] = run_chunk(cfg, c);
    };
    const unsigned nthreads = resolve_threads(cfg, chunks);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepReport rep;
    rep.check = cfg.check;
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
    rep.tolerance = cfg.tolerance;
    rep.dimension = cfg.dimension;
    rep.max_ratio = -std::numeric_limits<double>::infinity();
    // Chunk order keeps the earliest witness on ties, independent of thread count.
    for (const auto& r : results) {
        rep.violations += r.violations;
        rep.warnings += r.warnings;
        rep.resampled += r.resampled;
        rep.skipped += r.skipped;
        if (r.best && r.max_ratio > rep.max_ratio) {
            rep.max_ratio = r.max_ratio;
            rep.witness = r.best;
        }
        if (!rep.first_violation && r.first_violation) rep.first_violation = r.first_violation;
    }
    if (!rep.witness) rep.max_ratio = 0.0;
    rep.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

int SweepReport::exit_code() const {
    switch (kind_of(check)) {
    case CheckKind::theorem: return violations == 0 ? 0 : 1;
    case CheckKind::conjecture: return 0;
    case CheckKind::probe: return max_ratio > kProbeThreshold ? 0 : 1;
    }
    return 1;
}

std::string SweepReport::verdict() const {
    const std::string n = std::to_string(samples);
    switch (kind_of(check)) {
    case CheckKind::theorem:
        return violations == 0 ? "pass: no violations in " + n + " samples"
                               : "FAIL: " + std::to_string(violations) + " violations in " + n + " samples";
    case CheckKind::conjecture:
        return violations == 0 ? "no counterexample found in " + n + " samples"
                               : "counterexample found: " + std::to_string(violations) + " violating samples in " + n;
    case CheckKind::probe:
        return max_ratio > kProbeThreshold ? "unbounded: max ratio exceeds " + std::to_string(int(kProbeThreshold))
                                           : "threshold " + std::to_string(int(kProbeThreshold)) + " not reached";
    }
    return {};
}

nlohmann::json to_json(const Sample& s) {
    nlohmann::json j;
    if (!s.a.empty()) j["a"] = s.a;
    j["x"] = s.x;
    j["y"] = s.y;
    if (s.radius != 0.0) j["radius"] = s.radius;
    if (s.variant != 0) j["variant"] = s.variant;
    return j;
}

Sample sample_from_json(const nlohmann::json& j) {
    Sample s;
    if (j.contains("a")) s.a = j.at("a").get<Vec>();
    s.x = j.at("x").get<Vec>();
    s.y = j.at("y").get<Vec>();
    s.radius = j.value("radius", 0.0);
    s.variant = j.value("variant", 0);
    return s;
}

namespace {

nlohmann::json witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    nlohmann::json j = to_json(w->sample);
    j["index"] = w->index;
    j["ratio"] = w->ratio;
    return j;
}

} // namespace

nlohmann::json to_json(const SweepReport& r) {
    nlohmann::json j;
    j["check"] = std::string(to_string(r.check));
    j["kind"] = std::string(to_string(kind_of(r.check)));
    j["samples"] = r.samples;
    j["violations"] = r.violations;
    j["max_ratio"] = r.max_ratio;
    j["witness"] = witness_json(r.witness);
    j["first_violation"] = witness_json(r.first_violation);
    j["seed"] = r.seed;
    j["tolerance"] = r.tolerance;
    j["dimension"] = r.dimension;
    j["warnings"] = r.warnings;
    j["resampled"] = r.resampled;
    j["skipped"] = r.skipped;
    j["verdict"] = r.verdict();
    j["elapsed_s"] = r.elapsed_s;
    return j;
}

bool EqualityProbeReport::all_pass() const {
    return !items.empty() && std::all_of(items.begin(), items.end(), [](const ProbeItem& i) { return i.pass; });
}

const std::vector<Check>& checks_with_equality_case() {
    static const std::vector<Check> v{Check::cor3_7,   Check::thm4_1,   Check::thm4_3, Check::thm4_5,
                                      Check::lemma5_1, Check::lemma5_4, Check::thm6_7};
    return v;
}

EqualityProbeReport equality_case_probe(Check check) {
    constexpr double kEq = 1e-12;
    constexpr double kStrict = 1e-12;
    EqualityProbeReport rep{check, {}};
    auto equal = [&](std::string name, double lhs, double rhs) {
        rep.items.push_back({std::move(name), lhs, rhs, true, std::abs(lhs - rhs) <= kEq});
    };
    auto strict = [&](std::string name, double lhs, double rhs) {
        rep.items.push_back({std::move(name), lhs, rhs, false, lhs < rhs - kStrict});
    };

    switch (check) {
    case Check::cor3_7: {
        const PointInBall x(0.2, 0.0), y(0.7, 0.0), yp(0.7, 1e-3);
        equal("h = rho, collinear with origin", hilbert(x, y), rho(x, y));
        strict("h < rho, perturbed", hilbert(x, yp), rho(x, yp));
        break;
    }
    case Check::thm4_1: {
        const PointInBall x(0.4, 0.3), y(-0.4, -0.3), yp(-0.4, -0.299);
        equal("h = 2j at x = -y", hilbert(x, y), 2.0 * jdist(x, y));
        strict("h < 2j, perturbed", hilbert(x, yp), 2.0 * jdist(x, yp));
        break;
    }
    case Check::thm4_3: {
        const PointInBall x(0.5, 0.0), y(0.0, 0.5);
        equal("h = equal-norm upper branch at |x| = |y|", hilbert(x, y),
              equal_norm_formula(0.25, distance(x.coords(), y.coords())));
        const PointInBall c1(0.6, 0.0), c2(0.3, 0.0);
        const double t = 0.6, d = 0.3;
        equal("h = collinear upper branch", hilbert(c1, c2),
              std::log((1.0 + t) * (1.0 - t + d) / ((1.0 - t) * (1.0 + t - d))));
        const PointInBall yp(0.0, 0.499);
        const BoundPair b = rotation_bounds_far_point(x, yp);
        strict("h < upper, perturbed", hilbert(x, yp), b.upper);
        break;
    }
    case Check::thm4_5: {
        const PointInBall x(0.5, 0.0), y(0.0, 0.5), yp(0.0, 0.501);
        equal("lower = h at |x| = |y|", midpoint_rotation_bounds(x, y).lower, hilbert(x, y));
        strict("lower < h, perturbed", midpoint_rotation_bounds(x, yp).lower, hilbert(x, yp));
        const PointInBall c1(0.2, 0.0), c2(0.6, 0.0), c2p(0.6, 1e-3);
        equal("upper = h, collinear with origin", midpoint_rotation_bounds(c1, c2).upper, hilbert(c1, c2));
        strict("h < upper, perturbed", hilbert(c1, c2p), midpoint_rotation_bounds(c1, c2p).upper);
        break;
    }
    case Check::lemma5_1: {
        const InclusionRadii at0 = euclidean_to_hilbert_radii(PointInBall(0.0, 0.0), 0.3);
        equal("l0 = l1 at x = 0", at0.inner, at0.outer);
        const InclusionRadii pert = euclidean_to_hilbert_radii(PointInBall(1e-3, 0.0), 0.3);
        strict("l0 < l1, perturbed", pert.inner, pert.outer);
        break;
    }
    case Check::lemma5_4: {
        const double r = 1.0;
        const InclusionRadii at0 = hyperbolic_to_hilbert_radii(PointInBall(0.0, 0.0), r);
        equal("l0 = r at x = 0", at0.inner, r);
        equal("l1 = r at x = 0", at0.outer, r);
        const PointInBall onsphere(0.0, std::tanh(0.5 * r));
        equal("h = r on S_rho(0, r)", hilbert(PointInBall(0.0, 0.0), onsphere), r);
        const InclusionRadii pert = hyperbolic_to_hilbert_radii(PointInBall(1e-3, 0.0), r);
        strict("l0 < l1, perturbed", pert.inner, pert.outer);
        break;
    }
    case Check::thm6_7: {
        const PointInBall a(0.3, -0.2), x(0.1, 0.4), y(-0.5, 0.2);
        const double r = rho(x, y);
        equal("sh(rho(T_a x, T_a y)/2) = bound at K = 1", std::sinh(0.5 * rho(t_a(a, x), t_a(a, y))),
              qr_sh_bound(1.0, r));
        const double m1 = dist_origin_to_line(x, y);
        equal("hilbert bound equality at K = 1, m1 = m3", std::sinh(0.5 * hilbert(x, y)),
              hilbert_qr_bound(1.0, x, y, m1, m1));
        strict("sh(rho(T_a x, T_a y)/2) < bound at K = 1.001", std::sinh(0.5 * rho(t_a(a, x), t_a(a, y))),
               qr_sh_bound(1.001, r));
        break;
    }
    default:
        throw GeometryError(ErrorKind::ArgumentOutOfRange,
                            "no equality case for check " + std::string(to_string(check)));
    }
    return rep;
}

} // namespace hball
