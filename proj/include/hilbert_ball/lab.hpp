#pragma once

#include "hilbert_ball/geom_core.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hball {

enum class Check {
    thm4_1,
    cor3_7,
    lemma2_3,
    thm4_3,
    thm4_5,
    lemma5_1,
    lemma5_4,
    cor6_1,
    cor6_4,
    cor6_5,
    remark6_3,
    conjecture_1_plus_a,
    thm6_7,
    unboundedness_rho_over_h,
    unboundedness_j_over_h,
};

/// theorem: any violation is a bug. conjecture: evidence only. probe: looks for large ratios.
enum class CheckKind { theorem, conjecture, probe };

std::string_view to_string(Check c);
std::optional<Check> parse_check(std::string_view name);
CheckKind kind_of(Check c);
std::string_view to_string(CheckKind k);
const std::vector<Check>& all_checks();

/// Ratio a probe has to exceed to demonstrate unboundedness.
inline constexpr double kProbeThreshold = 100.0;

struct SweepConfig {
    Check check = Check::thm4_1;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    int dimension = 2;
    unsigned threads = 0; // 0: hardware concurrency, capped by HILBERT_BALL_THREADS
};

/// One sampled configuration. Unused fields stay empty.
struct Sample {
    Vec a;
    Vec x;
    Vec y;
    double radius = 0.0;
    int variant = 0; // thm6_7: 0 = T_a, 1 = z^2
};

struct Outcome {
    double ratio = 0.0;
    double margin = 0.0; // lhs - rhs of the checked inequality, scaled by max(1, |rhs|)
    bool violated = false;
    bool near_tolerance = false;
    bool skipped = false;
};

struct Witness {
    std::uint64_t index = 0;
    Sample sample;
    double ratio = 0.0;
};

struct SweepReport {
    Check check = Check::thm4_1;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    int dimension = 2;
    std::uint64_t violations = 0;
    std::uint64_t warnings = 0;  // exceeded the bound but stayed within tolerance
    std::uint64_t resampled = 0; // degenerate draws that were redrawn
    std::uint64_t skipped = 0;   // samples outside the check's hypothesis
    double max_ratio = 0.0;
    std::optional<Witness> witness;
    std::optional<Witness> first_violation;
    double elapsed_s = 0.0;

    /// Exit status contract: 0 pass, 1 violation (theorems) or threshold missed (probes).
    int exit_code() const;
    std::string verdict() const;
};

/// Deterministic uniform doubles in [0, 1) from a 64-bit engine.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    static Rng for_chunk(std::uint64_t seed, std::uint64_t chunk);

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

Vec sample_uniform_in_ball(Rng& rng, int dim);
Vec sample_unit_direction(Rng& rng, int dim);
/// |x| = 1 - 10^{-u}, u uniform in [1, 8].
Vec sample_boundary_biased(Rng& rng, int dim);

Sample draw_sample(Check check, Rng& rng, int dim, std::uint64_t index);

/// Evaluates one configuration. Throws GeometryError when the sample is degenerate.
Outcome evaluate_sample(Check check, const Sample& s, double tolerance);

/// Recomputes a witness ratio outside the sweep.
double replay_ratio(Check check, const Sample& s);

SweepReport run_sweep(const SweepConfig& cfg);

nlohmann::json to_json(const SweepReport& r);
nlohmann::json to_json(const Sample& s);
Sample sample_from_json(const nlohmann::json& j);

struct ProbeItem {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool expect_equal = true; // otherwise expects lhs < rhs strictly
    bool pass = false;
};

struct EqualityProbeReport {
    Check check;
    std::vector<ProbeItem> items;
    bool all_pass() const;
};

/// Exact equality configuration of a check plus a 1e-3 perturbation that must be strict.
EqualityProbeReport equality_case_probe(Check check);

/// Checks that have a stated equality case.
const std::vector<Check>& checks_with_equality_case();

} // namespace hball
