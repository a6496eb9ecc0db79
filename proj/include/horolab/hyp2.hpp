#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <array>

#include "horolab/config.hpp"

// Plane kernel for H^2 in the Poincare disk and upper half-plane models.
// Matrices act canonically on the half-plane; disk objects are converted on
// demand through one fixed Cayley map
//     T(z) = (z - i) / (z + i),   T(i) = 0, T(0) = -1, T(inf) = 1.
// Boundary points are kept as disk angles so the half-plane point at infinity
// needs no special case; for Moebius actions they are expanded to a real
// projective pair (p : q), u = p/q, with infinity = (1 : 0).

namespace horolab {

struct geometry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotUltraparallel : geometry_error {
    using geometry_error::geometry_error;
};
struct AsymmetricBase : geometry_error {
    using geometry_error::geometry_error;
};
struct HexagonInfeasible : geometry_error {
    using geometry_error::geometry_error;
};

enum class Model { HalfPlane, Disk };

using cplx = std::complex<double>;

struct Point {
    Model model;
    cplx z;

    Point() : model(Model::HalfPlane), z(0.0, 1.0) {}
    Point(Model m, cplx coord);
    static Point half_plane(double x, double y) { return Point(Model::HalfPlane, {x, y}); }
    static Point disk(double x, double y) { return Point(Model::Disk, {x, y}); }
};

Point to_half_plane(const Point& p);
Point to_disk(const Point& p);

// Ideal point, stored as its disk-model angle in [0, 2pi).
struct BoundaryPoint {
    double theta = 0.0;

    BoundaryPoint() = default;
    static BoundaryPoint disk_angle(double theta);
    // u finite, or the point at infinity when is_infinity is set.
    static BoundaryPoint half_plane(double u, bool is_infinity = false);
    static BoundaryPoint infinity() { return half_plane(0.0, true); }

    // Projective coordinates (p : q) of the half-plane trace, p^2 + q^2 = 1.
    std::array<double, 2> projective() const;
    bool is_infinite() const;
    double half_plane_coord() const;  // throws if infinite
    cplx disk_coord() const { return {std::cos(theta), std::sin(theta)}; }
};

double angular_dist(const BoundaryPoint& a, const BoundaryPoint& b);

struct Isometry {
    // Half-plane action  z -> M s(z)  with  s(z) = -conj(z)  iff reversing,
    // M = [[a,b],[c,d]], det = +1, sign canonical (first nonzero entry > 0).
    double a = 1, b = 0, c = 0, d = 1;
    bool reversing = false;

    Isometry() = default;
    Isometry(double a_, double b_, double c_, double d_, bool rev = false);

    static Isometry identity() { return Isometry(); }

    Isometry inverse() const;
    bool is_identity(double tol = tolerances().matrix_canon) const;
    double trace() const { return a + d; }

    Point operator()(const Point& p) const;
    BoundaryPoint operator()(const BoundaryPoint& xi) const;
};

Isometry operator*(const Isometry& g, const Isometry& h);
bool approx_equal(const Isometry& g, const Isometry& h, double tol);

enum class IsometryClass { Identity, Elliptic, Parabolic, Hyperbolic };
IsometryClass classify(const Isometry& g);
// Translation length of a hyperbolic isometry (0 otherwise).
double translation_length(const Isometry& g);
// Fixed boundary points of a non-elliptic, orientation-preserving isometry.
std::array<BoundaryPoint, 2> boundary_fixed_points(const Isometry& g);

struct Geodesic {
    BoundaryPoint e1, e2;  // unordered, angular separation >= geodesic_min_sep

    Geodesic() = default;
    Geodesic(BoundaryPoint a, BoundaryPoint b);
};

struct Ray {
    Point origin;
    BoundaryPoint endpoint;

    Ray() = default;
    Ray(Point o, BoundaryPoint e) : origin(o), endpoint(e) {}
};

// --- metric ---------------------------------------------------------------

double dist(const Point& p, const Point& q);
Point point_on_ray(const Ray& r, double t);
double angle_at(const Point& p, const Point& q1, const Point& q2);
// Angle at r.origin between the ray and the segment toward q.
double angle_with_ray(const Ray& r, const Point& q);

// --- geodesics ------------------------------------------------------------

Geodesic geodesic_through(const Point& p, const Point& q);
Geodesic geodesic_from(const Point& p, const BoundaryPoint& xi);
Isometry reflect(const Geodesic& C);
Geodesic perpendicular_bisector(const Point& p, const Point& q);
Point midpoint(const Point& p, const Point& q);
Point project_to_geodesic(const Geodesic& C, const Point& p);
double dist_to_geodesic(const Point& p, const Geodesic& C);
// Distance from p to the ray (0 beyond the origin clamp).
double dist_to_ray(const Point& p, const Ray& r);

enum class GeodesicRelation { Intersecting, Asymptotic, Ultraparallel };
GeodesicRelation relate(const Geodesic& C, const Geodesic& Cp);
// Distance between two ultraparallel geodesics (0 if they meet or are asymptotic).
double dist_geodesics(const Geodesic& C, const Geodesic& Cp);
Geodesic common_perpendicular(const Geodesic& C, const Geodesic& Cp);

// Unique hyperbolic g with axis perpendicular to C, C', g(C) = C', and
// g^{-1}(base) = reflect(C)(base) for a base equidistant from C and C'.
Isometry pair_geodesics(const Geodesic& C, const Geodesic& Cp, const Point& base,
                        double tol_pair = tolerances().pair_base);

// --- classical trigonometry ----------------------------------------------

// delta(t, eps) = asinh(cosh eps * sinh t) - t, the detour cost of running at
// offset eps from a geodesic; increasing in t for eps > 0.
double divergence_gap(double t, double eps);

struct HexagonSides {
    // Cyclic side order a, gamma, b, alpha, c, beta; alpha opposite a.
    double a, b, c;
    double alpha, beta, gamma;
};
// Given the alternating sides a, b, c of a right-angled hexagon, returns the
// three opposite sides.
HexagonSides solve_right_hexagon(double a, double b, double c);

// Frame development of a closed right-angled hexagon with the given side
// lengths visited in cyclic order; returns the six vertices (half-plane) and
// the closure defect |product - id|.
struct HexagonDevelopment {
    std::array<Point, 6> vertex;
    double closure_defect;
};
HexagonDevelopment develop_hexagon(const std::array<double, 6>& sides);

// --- model conversions for the remaining types -----------------------------

// Complex 2x2 Moebius matrix of the disk-model action (orientation-preserving
// part); inverse of from_disk_matrix up to scale.
std::array<cplx, 4> disk_matrix(const Isometry& g);
Isometry from_disk_matrix(const std::array<cplx, 4>& m, bool reversing = false);

}  // namespace horolab
