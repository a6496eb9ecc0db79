#include "horolab/horo.hpp"

#include <cmath>
#include <limits>

namespace horolab {

double cocycle(const Point& P, const Point& x, const Point& y) {
    return dist(x, P) - dist(P, y);
}

double busemann(const BoundaryPoint& xi, const Point& x, const Point& y) {
    Point hx = to_half_plane(x), hy = to_half_plane(y);
    auto [p, q] = xi.projective();
    double nx = std::norm(q * hx.z - p);
    double ny = std::norm(q * hy.z - p);
    return std::log(hy.z.imag() / hx.z.imag()) + std::log(nx) - std::log(ny);
}

double approximation_gap(const BoundaryPoint& xi, const Point& x, const Point& y, double t) {
    Point P = point_on_ray(Ray(x, xi), t);
    return std::fabs(busemann(xi, x, y) - cocycle(P, x, y));
}

double Horoball::level_from(const Point& new_base) const {
    // {B(base,.) >= level} = {B(new_base,.) >= level - B(base, new_base)}
    return level - busemann(center, base, new_base);
}

double Horoball::euclidean_radius() const {
    // level relative to the disk center, then the tangent-circle radius
    double c = level_from(Point::disk(0, 0));
    double r = std::tanh(c / 2.0);
    return (1.0 - r) / 2.0;
}

Horoball horoball_through(const BoundaryPoint& xi, const Point& x) {
    return Horoball{xi, x, 0.0};
}

double signed_dist_point(const Point& x, const Horoball& H) {
    return H.level - busemann(H.center, H.base, x);
}

double signed_dist_horoballs(const Horoball& H, const Horoball& Hp) {
    if (angular_dist(H.center, Hp.center) > tolerances().near_boundary_angle)
        throw DifferentCenters("horoballs are not concentric");
    return Hp.level_from(H.base) - H.level;
}

double busemann_max_on_geodesic(const BoundaryPoint& xi, const Point& base, const Geodesic& C) {
    if (angular_dist(xi, C.e1) < tolerances().near_boundary_angle ||
        angular_dist(xi, C.e2) < tolerances().near_boundary_angle)
        return std::numeric_limits<double>::infinity();
    // Send xi to infinity; B becomes log(Im . / Im base'), maximized at the
    // top of the image semicircle.
    auto [p, q] = xi.projective();
    Isometry send_inf(p, q, -q, p);
    Point b = send_inf(to_half_plane(base));
    double u1 = send_inf(C.e1).half_plane_coord();
    double u2 = send_inf(C.e2).half_plane_coord();
    double rho = std::fabs(u1 - u2) / 2.0;
    return std::log(rho / to_half_plane(b).z.imag());
}

double signed_dist_geodesic(const Geodesic& C, const Horoball& H) {
    return H.level - busemann_max_on_geodesic(H.center, H.base, C);
}

double gromov_bourdon(const Point& o, const BoundaryPoint& eta, const BoundaryPoint& xi) {
    if (angular_dist(eta, xi) < tolerances().near_boundary_angle) return 0.0;
    Geodesic C(eta, xi);
    Point x = project_to_geodesic(C, o);
    return std::exp(-0.5 * std::fabs(busemann(eta, o, x) + busemann(xi, o, x)));
}

double conformal_coeff(const Isometry& g, const BoundaryPoint& zeta, const Point& o) {
    return std::exp(busemann(zeta, o, g.inverse()(o)));
}

}  // namespace horolab
