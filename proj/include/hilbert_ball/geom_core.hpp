#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hball {

using Vec = std::vector<double>;
using Complex = std::complex<double>;

/// Points with 1 - |x| below this are treated as boundary points and rejected.
inline constexpr double kBoundaryEps = 1e-12;

// Small vector kernel over coordinate spans. Dimensions must agree.
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double norm(std::span<const double> a);
double distance(std::span<const double> a, std::span<const double> b);
Vec sub(std::span<const double> a, std::span<const double> b);
Vec add(std::span<const double> a, std::span<const double> b);
Vec scale(std::span<const double> a, double s);
/// a + s * b
Vec axpy(std::span<const double> a, double s, std::span<const double> b);

/// |x|^2 |y|^2 - (x.y)^2, summed as squared 2x2 minors so it never cancels.
double wedge_norm2(std::span<const double> x, std::span<const double> y);

/// A point of the open unit ball B^n, n >= 2.
class PointInBall {
public:
    explicit PointInBall(Vec coords);
    PointInBall(double x1, double x2) : PointInBall(Vec{x1, x2}) {}

    static PointInBall from_complex(Complex z) { return PointInBall(z.real(), z.imag()); }
    static PointInBall origin(std::size_t dim) { return PointInBall(Vec(dim, 0.0)); }
    /// Point whose 1 - |x|^2 is known from a closed form more accurately than the
    /// coordinates can carry it (images of points near the sphere).
    static PointInBall with_conorm2(Vec coords, double conorm2);

    std::span<const double> coords() const noexcept { return coords_; }
    const Vec& vec() const noexcept { return coords_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }

    double norm() const noexcept { return norm_; }
    double norm2() const noexcept { return norm2_; }
    /// 1 - |x|^2
    double conorm2() const noexcept { return conorm2_; }
    bool is_origin() const noexcept { return norm2_ == 0.0; }

    /// Only valid for dim() == 2.
    Complex to_complex() const;

    friend bool operator==(const PointInBall& a, const PointInBall& b) { return a.coords_ == b.coords_; }

private:
    Vec coords_;
    double norm2_ = 0.0;
    double norm_ = 0.0;
    double conorm2_ = 1.0;
};

void require_same_dim(const PointInBall& x, const PointInBall& y);

/// Boundary hits of the line through x and y, ordered so |u - x| < |u - y|.
struct Chord {
    Vec u;
    Vec v;
    PointInBall x;
    PointInBall y;
};

/// Orthonormal frame of a 2-plane through the origin.
struct PlaneFrame {
    Vec e1;
    Vec e2;

    std::array<double, 2> to_plane(std::span<const double> p) const;
    Vec from_plane(std::array<double, 2> q) const;
    PointInBall project(const PointInBall& p) const;
};

/// |u - y||x - v| / (|u - x||y - v|)
double cross_ratio(std::span<const double> u, std::span<const double> x,
                   std::span<const double> y, std::span<const double> v);

Chord chord_through(const PointInBall& x, const PointInBall& y);

/// Euclidean distance from 0 to L(x, y).
double dist_origin_to_line(const PointInBall& x, const PointInBall& y);

/// 1 - m^2 for m = dist_origin_to_line(x, y): the squared half-length of the chord,
/// summed as (1 - |x|^2) + (x.e)^2 so it stays accurate when the line grazes the sphere.
double chord_half_length2(const PointInBall& x, const PointInBall& y);

/// Same distance for planar points written as complex numbers:
/// |conj(x) y - x conj(y)| / (2 |x - y|).
double dist_origin_to_line_complex(Complex x, Complex y);

/// Frame of a plane containing 0, x and y.
PlaneFrame reduce_to_plane(const PointInBall& x, const PointInBall& y);

/// True when x, y, 0 lie on one line (relative tolerance on the wedge).
bool collinear_with_origin(const PointInBall& x, const PointInBall& y, double tol = 1e-14);

} // namespace hball
