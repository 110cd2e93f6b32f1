#include "hilbert_ball/geom_core.hpp"

#include "hilbert_ball/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hball {

namespace {

void check_dims(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw GeometryError(ErrorKind::DimensionMismatch,
                            std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

void normalize_in_place(Vec& v) {
    const double n = norm(v);
    for (double& c : v) c /= n;
}

// v -= (v.e) e
void project_out(Vec& v, std::span<const double> e) {
    const double s = dot(v, e);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= s * e[i];
}

} // namespace

double dot(std::span<const double> a, std::span<const double> b) {
    check_dims(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return dot(a, a); }

double norm(std::span<const double> a) { return std::sqrt(norm2(a)); }

double distance(std::span<const double> a, std::span<const double> b) {
    check_dims(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Vec sub(std::span<const double> a, std::span<const double> b) {
    check_dims(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec add(std::span<const double> a, std::span<const double> b) {
    check_dims(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec scale(std::span<const double> a, double s) {
    Vec r(a.begin(), a.end());
    for (double& c : r) c *= s;
    return r;
}

Vec axpy(std::span<const double> a, double s, std::span<const double> b) {
    check_dims(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
}

double wedge_norm2(std::span<const double> x, std::span<const double> y) {
    check_dims(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const double m = x[i] * y[j] - x[j] * y[i];
            s += m * m;
        }
    return s;
}

PointInBall::PointInBall(Vec coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2)
        throw GeometryError(ErrorKind::InvalidPoint, "dimension must be at least 2");
    for (double c : coords_)
        if (!std::isfinite(c)) throw GeometryError(ErrorKind::InvalidPoint, "non-finite coordinate");
    norm2_ = hball::norm2(coords_);
    norm_ = std::sqrt(norm2_);
    conorm2_ = 1.0 - norm2_;
    if (!(1.0 - norm_ >= kBoundaryEps))
        throw GeometryError(ErrorKind::InvalidPoint,
                            "point is not inside the open unit ball (|x| = " + std::to_string(norm_) + ")");
}

PointInBall PointInBall::with_conorm2(Vec coords, double conorm2) {
    PointInBall p(std::move(coords));
    if (!(std::abs(conorm2 - p.conorm2_) <= 1e-12))
        throw GeometryError(ErrorKind::InternalConsistency, "supplied 1 - |x|^2 disagrees with the coordinates");
    p.conorm2_ = conorm2;
    return p;
}

Complex PointInBall::to_complex() const {
    if (dim() != 2) throw GeometryError(ErrorKind::DimensionMismatch, "complex form needs n = 2");
    return {coords_[0], coords_[1]};
}

void require_same_dim(const PointInBall& x, const PointInBall& y) {
    if (x.dim() != y.dim())
        throw GeometryError(ErrorKind::DimensionMismatch,
                            std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
}

double cross_ratio(std::span<const double> u, std::span<const double> x,
                   std::span<const double> y, std::span<const double> v) {
    const double ux = distance(u, x);
    const double yv = distance(y, v);
    if (ux < 1e-15 || yv < 1e-15)
        throw GeometryError(ErrorKind::DegenerateConfiguration, "cross-ratio denominator vanishes");
    return distance(u, y) * distance(x, v) / (ux * yv);
}

Chord chord_through(const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    const Vec d = sub(y.coords(), x.coords());
    const double a = norm2(d);
    if (std::sqrt(a) <= 1e-14) throw GeometryError(ErrorKind::CoincidentPoints, "chord of coincident points");
    const double b = 2.0 * dot(x.coords(), d);
    const double c = -x.conorm2();
    const double disc = b * b - 4.0 * a * c;
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double t_back = q / a;
    double t_fwd = c / q;
    if (t_back > t_fwd) std::swap(t_back, t_fwd);
    // t_back < 0 < 1 < t_fwd: u sits behind x, v beyond y.
    return Chord{axpy(x.coords(), t_back, d), axpy(x.coords(), t_fwd, d), x, y};
}

double dist_origin_to_line(const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    const double d = distance(x.coords(), y.coords());
    if (d <= 1e-14) throw GeometryError(ErrorKind::CoincidentPoints, "line through coincident points");
    return std::sqrt(wedge_norm2(x.coords(), y.coords())) / d;
}

double chord_half_length2(const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    const Vec e = sub(y.coords(), x.coords());
    const double d2 = norm2(e);
    if (d2 <= 1e-28) throw GeometryError(ErrorKind::CoincidentPoints, "line through coincident points");
    const double t = dot(x.coords(), e);
    return x.conorm2() + t * t / d2;
}

double dist_origin_to_line_complex(Complex x, Complex y) {
    const double d = std::abs(x - y);
    if (d <= 1e-14) throw GeometryError(ErrorKind::CoincidentPoints, "line through coincident points");
    return std::abs(std::conj(x) * y - x * std::conj(y)) / (2.0 * d);
}

bool collinear_with_origin(const PointInBall& x, const PointInBall& y, double tol) {
    require_same_dim(x, y);
    return std::sqrt(wedge_norm2(x.coords(), y.coords())) <= tol * std::max(1e-300, x.norm() * y.norm()) ||
           x.is_origin() || y.is_origin();
}

std::array<double, 2> PlaneFrame::to_plane(std::span<const double> p) const {
    return {dot(p, e1), dot(p, e2)};
}

Vec PlaneFrame::from_plane(std::array<double, 2> q) const {
    Vec r(e1.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = q[0] * e1[i] + q[1] * e2[i];
    return r;
}

PointInBall PlaneFrame::project(const PointInBall& p) const {
    const auto q = to_plane(p.coords());
    return PointInBall(q[0], q[1]);
}

PlaneFrame reduce_to_plane(const PointInBall& x, const PointInBall& y) {
    require_same_dim(x, y);
    if (distance(x.coords(), y.coords()) <= 1e-14)
        throw GeometryError(ErrorKind::CoincidentPoints, "plane through coincident points");

    // Anchor on the longer vector; the other one supplies e2.
    const PointInBall& base = x.norm() >= y.norm() ? x : y;
    const PointInBall& other = x.norm() >= y.norm() ? y : x;

    PlaneFrame f;
    f.e1 = Vec(base.coords().begin(), base.coords().end());
    normalize_in_place(f.e1);

    Vec w(other.coords().begin(), other.coords().end());
    project_out(w, f.e1);
    project_out(w, f.e1);
    if (norm(w) <= 1e-15 * other.norm() || other.is_origin()) {
        const std::size_t n = x.dim();
        for (std::size_t k = 0; k < n; ++k) {
            w.assign(n, 0.0);
            w[k] = 1.0;
            project_out(w, f.e1);
            if (norm(w) >= 0.5) break;
        }
    }
    normalize_in_place(w);
    project_out(w, f.e1);
    normalize_in_place(w);
    f.e2 = std::move(w);
    return f;
}

} // namespace hball
