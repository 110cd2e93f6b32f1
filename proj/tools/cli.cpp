#include "cli.hpp"

#include "hilbert_ball/balls.hpp"
#include "hilbert_ball/error.hpp"
#include "hilbert_ball/lab.hpp"
#include "hilbert_ball/metrics.hpp"
#include "hilbert_ball/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace hball::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// Short form for SVG coordinates.
std::string coord(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

Vec parse_csv(const std::string& text, const char* flag) {
    Vec out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        const char* b = text.data() + pos;
        const char* e = text.data() + end;
        while (b < e && *b == ' ') ++b;
        while (e > b && e[-1] == ' ') --e;
        if (b < e && *b == '+') ++b;
        double v = 0.0;
        auto [p, ec] = std::from_chars(b, e, v);
        if (b == e || ec != std::errc() || p != e) throw UsageError(std::string(flag) + ": cannot parse '" + text + "'");
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

PointInBall parse_point(const std::string& text, const char* flag) {
    try {
        return PointInBall(parse_csv(text, flag));
    } catch (const GeometryError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::string extension(const std::string& path) {
    const auto dot = path.rfind('.');
    if (dot == std::string::npos) return {};
    std::string ext = path.substr(dot + 1);
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    f << body;
    if (!f.flush()) throw UsageError("write to '" + path + "' failed");
}

// SVG with math orientation: (x, y) is drawn at (x, -y).
class Svg {
public:
    Svg() {
        os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\" width=\"600\" height=\"600\">\n"
            << "<rect x=\"-1.1\" y=\"-1.1\" width=\"2.2\" height=\"2.2\" fill=\"white\"/>\n";
    }
    void circle(double cx, double cy, double r, const char* style) {
        os_ << "<circle cx=\"" << coord(cx) << "\" cy=\"" << coord(-cy) << "\" r=\"" << coord(r) << "\" " << style
            << "/>\n";
    }
    void line(double x1, double y1, double x2, double y2, const char* style) {
        os_ << "<line x1=\"" << coord(x1) << "\" y1=\"" << coord(-y1) << "\" x2=\"" << coord(x2) << "\" y2=\""
            << coord(-y2) << "\" " << style << "/>\n";
    }
    void polyline(const std::vector<std::array<double, 2>>& pts, const char* style) {
        os_ << "<polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            os_ << (i ? " " : "") << coord(pts[i][0]) << "," << coord(-pts[i][1]);
        os_ << "\" " << style << "/>\n";
    }
    void point(std::span<const double> p, const std::string& label) {
        circle(p[0], p[1], 0.015, "fill=\"none\" stroke=\"black\" stroke-width=\"0.005\"");
        os_ << "<text x=\"" << coord(p[0] + 0.03) << "\" y=\"" << coord(-p[1] - 0.03)
            << "\" font-size=\"0.08\" font-style=\"italic\">" << label << "</text>\n";
    }
    void unit_circle() { circle(0, 0, 1, "fill=\"none\" stroke=\"black\" stroke-width=\"0.006\""); }
    std::string finish() {
        os_ << "</svg>\n";
        return os_.str();
    }

private:
    std::ostringstream os_;
};

constexpr const char* kThin = "stroke=\"black\" stroke-width=\"0.004\"";
constexpr const char* kCurve = "fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.006\"";

std::string ball_svg(const BallBoundary2D& b) {
    Svg svg;
    svg.unit_circle();
    std::vector<std::array<double, 2>> pts;
    for (const auto& s : b.samples) pts.push_back({s.point[0], s.point[1]});
    if (!pts.empty()) pts.push_back(pts.front());
    svg.polyline(pts, kCurve);
    const double cx = b.center.coords()[0], cy = b.center.coords()[1];
    svg.line(cx - 0.02, cy, cx + 0.02, cy, kThin);
    svg.line(cx, cy - 0.02, cx, cy + 0.02, kThin);
    return svg.finish();
}

std::string ball_csv(const BallBoundary2D& b) {
    std::string out = "psi,y1,y2,h_check\n";
    for (const auto& s : b.samples) {
        const double h = hilbert_oracle(b.center, PointInBall(s.point)).value;
        out += num(s.psi) + "," + num(s.point[0]) + "," + num(s.point[1]) + "," + num(h) + "\n";
    }
    return out;
}

void write_ball(const BallBoundary2D& b, const std::string& path) {
    const std::string ext = extension(path);
    if (ext == "svg")
        write_file(path, ball_svg(b));
    else if (ext == "csv")
        write_file(path, ball_csv(b));
    else
        throw UsageError("--out must end in .svg or .csv");
}

int cmd_dist(const std::string& metric, const std::string& xs, const std::string& ys, const std::string& method,
             std::ostream& out) {
    const PointInBall x = parse_point(xs, "--x"), y = parse_point(ys, "--y");
    if (x.dim() != y.dim()) throw UsageError("--x and --y have different dimensions");
    double value = 0.0;
    if (metric == "hilbert") {
        if (method == "oracle")
            value = hilbert_oracle(x, y).value;
        else if (method == "ch")
            value = hilbert_ch_form(x, y).value;
        else if (method == "sh")
            value = hilbert_sh_identity(x, y).value;
        else
            value = hilbert_equal_norm(x, y).value;
    } else if (metric == "hyperbolic") {
        value = rho(x, y);
    } else {
        value = jdist(x, y);
    }
    out << num(value) << "\n";
    return kExitOk;
}

int cmd_ball(const std::string& center, double level, int samples, const std::string& path, std::ostream& out) {
    const PointInBall x = parse_point(center, "--center");
    if (x.dim() != 2) throw UsageError("--center must be a point of the unit disk (2 coordinates)");
    if (!(level > 0.0) || !std::isfinite(level)) throw UsageError("--level must be positive");
    if (samples < 3) throw UsageError("--samples must be at least 3");
    const BallBoundary2D b = hilbert_ball_boundary(x, level, samples);
    write_ball(b, path);
    out << "wrote " << samples << " boundary samples to " << path << "\n";
    return kExitOk;
}

int cmd_radii(const std::string& center, const std::string& from, double radius, std::ostream& out) {
    const PointInBall x = parse_point(center, "--center");
    InclusionRadii r{};
    std::string inner_label, outer_label;
    if (from == "euclidean") {
        r = euclidean_to_hilbert_radii(x, radius);
        inner_label = "hilbert_inner";
        outer_label = "hilbert_outer";
    } else if (from == "hilbert") {
        r = hilbert_to_euclidean_radii(x, radius);
        inner_label = "euclidean_inner";
        outer_label = "euclidean_outer";
    } else {
        r = hyperbolic_to_hilbert_radii(x, radius);
        inner_label = "hilbert_inner";
        outer_label = "hilbert_outer";
    }
    out << inner_label << " " << num(r.inner) << "\n" << outer_label << " " << num(r.outer) << "\n";
    return kExitOk;
}

int cmd_sweep(const std::string& check, std::uint64_t samples, std::uint64_t seed, double tol, int dim,
              unsigned threads, const std::string& json_path, std::ostream& out) {
    const auto c = parse_check(check);
    if (!c) throw UsageError("unknown check '" + check + "'");
    if (dim < 2) throw UsageError("--dim must be at least 2");
    if (!(tol >= 0.0)) throw UsageError("--tol must be non-negative");
    SweepConfig cfg;
    cfg.check = *c;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.tolerance = tol;
    cfg.dimension = dim;
    cfg.threads = threads;
    const SweepReport rep = run_sweep(cfg);
    if (!json_path.empty()) write_file(json_path, to_json(rep).dump(2) + "\n");
    out << "check " << to_string(rep.check) << " (" << to_string(kind_of(rep.check)) << ")\n"
        << "samples " << rep.samples << "\n"
        << "violations " << rep.violations << "\n"
        << "max_ratio " << num(rep.max_ratio) << "\n";
    if (rep.skipped) out << "skipped " << rep.skipped << "\n";
    if (rep.witness) out << "witness " << to_json(rep.witness->sample).dump() << "\n";
    out << "verdict " << rep.verdict() << "\n";
    return rep.exit_code();
}

// Figures 1-3 draw a chord with its four marked points; figure 4 is the Hilbert disk.
int cmd_figure(int which, const std::string& path, std::ostream& out) {
    using std::numbers::pi;
    if (which < 1 || which > 4) throw UsageError("--which must be 1, 2, 3 or 4");
    if (which == 4) {
        const PointInBall x(0.75, 0.0);
        const BallBoundary2D b = hilbert_ball_boundary(x, 1.5, 512);
        if (!path.empty()) write_ball(b, path);
        out << "center 0.75,0 level 1.5 samples 512\n"
            << "axis points " << num(b.samples[0].point[0]) << " " << num(b.samples[256].point[0]) << "\n";
        return kExitOk;
    }
    Vec u, v, x, y;
    Vec extra;
    std::string caption;
    if (which == 1) {
        const double m = 3 * pi / 5, k0 = 1.0 / 3, k1 = 5.0 / 6;
        u = {1.0, 0.0};
        v = {std::cos(m), std::sin(m)};
        x = axpy(u, k0, sub(v, u));
        y = axpy(u, k1, sub(v, u));
        caption = "u=1 v=exp(i 3pi/5) k0=1/3 k1=5/6";
    } else if (which == 2) {
        const double psi = pi / 6;
        x = {0.5, 0.0};
        const Vec uu{std::cos(psi), std::sin(psi)};
        y = axpy(x, (1.0 / 3) / distance(x, uu), sub(x, uu));
        const Chord ch = chord_through(PointInBall(x), PointInBall(y));
        u = ch.u;
        v = ch.v;
        caption = "x=1/2 psi=pi/6 |x-y|=1/3";
    } else {
        const double q = 1.0 / 3, d = 7.0 / 15, nu = pi / 3;
        x = {q + d * std::cos(nu), d * std::sin(nu)};
        y = {q - d * std::cos(nu), -d * std::sin(nu)};
        extra = {q, 0.0};
        const Chord ch = chord_through(PointInBall(x), PointInBall(y));
        u = ch.u;
        v = ch.v;
        caption = "q=1/3 d=7/15 nu=pi/3";
    }
    const PointInBall px(x), py(y);
    if (!path.empty()) {
        if (extension(path) != "svg") throw UsageError("--out must end in .svg");
        Svg svg;
        svg.unit_circle();
        svg.line(u[0], u[1], v[0], v[1], kThin);
        svg.point(u, "u");
        svg.point(v, "v");
        svg.point(x, "x");
        svg.point(y, "y");
        svg.point(Vec{0.0, 0.0}, "0");
        if (!extra.empty()) {
            svg.point(extra, "q");
            svg.circle(extra[0], extra[1], 7.0 / 15, "fill=\"none\" stroke=\"gray\" stroke-width=\"0.004\"");
        }
        write_file(path, svg.finish());
    }
    out << "figure " << which << ": " << caption << "\n";
    out << "x " << num(x[0]) << "," << num(x[1]) << "\n"
        << "y " << num(y[0]) << "," << num(y[1]) << "\n"
        << "u " << num(u[0]) << "," << num(u[1]) << "\n"
        << "v " << num(v[0]) << "," << num(v[1]) << "\n"
        << "h " << num(hilbert_oracle(px, py).value) << "\n"
        << "rho " << num(rho(px, py)) << "\n"
        << "j " << num(jdist(px, py)) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& only, std::ostream& out) {
    static const std::vector<std::string> groups{"metrics", "inequalities", "equality",    "balls",        "special",
                                                 "moebius", "qr",           "conjecture", "unboundedness"};
    if (!only.empty() && std::find(groups.begin(), groups.end(), only) == groups.end())
        throw UsageError("unknown group '" + only + "'");
    int failed = 0;
    std::size_t n = 0;
    for (const auto& e : verify::acceptance_criteria()) {
        if (!only.empty() && e.group != only) continue;
        const verify::CriterionResult r = verify::run_criterion(e);
        out << verify::format_result_line(r) << "\n" << std::flush;
        ++n;
        if (!r.passed) ++failed;
    }
    out << n - failed << "/" << n << " criteria passed\n";
    return failed ? kExitViolation : kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert metric on the unit ball"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string metric = "hilbert", method = "ch", xs, ys;
    auto* dist = app.add_subcommand("dist", "distance between two points");
    dist->add_option("--metric", metric)->check(CLI::IsMember({"hilbert", "hyperbolic", "j"}));
    dist->add_option("--x", xs, "comma-separated coordinates")->required();
    dist->add_option("--y", ys, "comma-separated coordinates")->required();
    dist->add_option("--method", method, "Hilbert evaluation path")
        ->check(CLI::IsMember({"oracle", "ch", "sh", "equalnorm"}));

    std::string center, outpath;
    double level = 0.0;
    int samples = 512;
    auto* ball = app.add_subcommand("ball", "boundary of a Hilbert disk");
    ball->add_option("--center", center)->required();
    ball->add_option("--level", level)->required();
    ball->add_option("--samples", samples);
    ball->add_option("--out", outpath, ".svg or .csv")->required();

    std::string from = "euclidean";
    double radius = 0.0;
    auto* radii = app.add_subcommand("radii", "inclusion radii between metric balls");
    radii->add_option("--center", center)->required();
    radii->add_option("--from", from, "kind of the given ball")
        ->check(CLI::IsMember({"euclidean", "hilbert", "hyperbolic"}));
    radii->add_option("--radius", radius)->required();

    std::string check, json_path;
    std::uint64_t sweep_samples = 100000, seed = 0;
    double tol = 1e-9;
    int dim = 2;
    unsigned threads = 0;
    auto* sweep = app.add_subcommand("sweep", "randomized check of an inequality");
    sweep->add_option("--check", check)->required();
    sweep->add_option("--samples", sweep_samples);
    sweep->add_option("--seed", seed);
    sweep->add_option("--tol", tol);
    sweep->add_option("--dim", dim);
    sweep->add_option("--threads", threads);
    sweep->add_option("--json", json_path, "write the report here");

    int which = 0;
    auto* figure = app.add_subcommand("figure", "reproduce a figure configuration");
    figure->add_option("--which", which)->required();
    figure->add_option("--out", outpath, "SVG output (figure 4 also accepts .csv)");

    std::string only;
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--only", only, "restrict to one group");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (dist->parsed()) return cmd_dist(metric, xs, ys, method, out);
        if (ball->parsed()) return cmd_ball(center, level, samples, outpath, out);
        if (radii->parsed()) return cmd_radii(center, from, radius, out);
        if (sweep->parsed()) return cmd_sweep(check, sweep_samples, seed, tol, dim, threads, json_path, out);
        if (figure->parsed()) return cmd_figure(which, outpath, out);
        if (verify->parsed()) return cmd_verify(only, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace hball::cli
