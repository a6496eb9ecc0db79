#include <doctest.h>

#include <cmath>
#include <random>

#include "horolab/horo.hpp"

using namespace horolab;

namespace {

std::mt19937 rng(987123);

double urand(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
}

Point random_point(double spread = 3.0) {
    return Point::half_plane(urand(-spread, spread), urand(0.05, spread + 1));
}

BoundaryPoint random_boundary() { return BoundaryPoint::disk_angle(urand(0, 2 * M_PI)); }

Isometry random_isometry(bool allow_reversing = false) {
    Isometry t(1, urand(-2, 2), 0, 1);
    double lam = std::exp(urand(-1.5, 1.5));
    Isometry s(std::sqrt(lam), 0, 0, 1 / std::sqrt(lam));
    double th = urand(0, 6.28318);
    Isometry r(std::cos(th / 2), std::sin(th / 2), -std::sin(th / 2), std::cos(th / 2));
    Isometry g = t * s * r;
    if (allow_reversing && urand(0, 1) < 0.5)
        g = g * reflect(Geodesic(BoundaryPoint::half_plane(0), BoundaryPoint::infinity()));
    return g;
}

}  // namespace

TEST_CASE("cocycle basics") {
    Point x = random_point(), y = random_point(), P = random_point();
    CHECK(cocycle(P, x, P) == doctest::Approx(dist(x, P)).epsilon(1e-12));
    CHECK(cocycle(P, x, x) == doctest::Approx(0.0));
    CHECK(cocycle(Point::half_plane(0, 16), Point::half_plane(0, 1), Point::half_plane(0, 2)) ==
          doctest::Approx(std::log(2)).epsilon(1e-12));
    // cocycle identity, algebraic
    Point xp = random_point();
    CHECK(cocycle(P, x, y) - cocycle(P, xp, y) ==
          doctest::Approx(cocycle(P, x, xp)).epsilon(1e-12));
}

TEST_CASE("busemann closed form vs cocycle limit oracle") {
    // The closed form must match the cocycle along the ray before any module
    // builds on it.
    for (int k = 0; k < 60; ++k) {
        BoundaryPoint xi = random_boundary();
        Point x = random_point(1.0), y = random_point(1.0);
        double b25 = cocycle(point_on_ray(Ray(x, xi), 25.0), x, y);
        CHECK(busemann(xi, x, y) == doctest::Approx(b25).epsilon(1e-9));
    }
    // half-plane xi = infinity: B(i, 2i) = log 2
    CHECK(busemann(BoundaryPoint::infinity(), Point::half_plane(0, 1),
                   Point::half_plane(0, 2)) == doctest::Approx(std::log(2)).epsilon(1e-12));
}

TEST_CASE("busemann grows along its ray") {
    BoundaryPoint xi = random_boundary();
    Point x = random_point();
    for (double t : {0.5, 1.0, 3.0, 10.0})
        CHECK(busemann(xi, x, point_on_ray(Ray(x, xi), t)) ==
              doctest::Approx(t).epsilon(1e-9));
}

TEST_CASE("horofunction axioms") {
    for (int k = 0; k < 1000; ++k) {
        BoundaryPoint xi = random_boundary();
        Point x = random_point(), y = random_point(), xp = random_point();
        double b = busemann(xi, x, y);
        // cocycle condition
        CHECK(busemann(xi, x, xp) + busemann(xi, xp, y) == doctest::Approx(b).epsilon(1e-10));
        // skew-symmetry
        CHECK(busemann(xi, y, x) == doctest::Approx(-b).epsilon(1e-10));
        // 1-Lipschitz
        CHECK(b <= dist(x, y) + 1e-10);
        // isometry invariance, orientation-reversing included
        Isometry g = random_isometry(true);
        CHECK(busemann(g(xi), g(x), g(y)) == doctest::Approx(b).epsilon(1e-9));
        CHECK(busemann(xi, x, x) == doctest::Approx(0.0));
    }
}

TEST_CASE("equality with dist forces the endpoint") {
    // If B_xi(x, y) = d(x, y), the ray from x through y ends at xi.
    for (int k = 0; k < 50; ++k) {
        BoundaryPoint xi = random_boundary();
        Point x = random_point();
        Point y = point_on_ray(Ray(x, xi), urand(0.3, 3.0));
        CHECK(busemann(xi, x, y) == doctest::Approx(dist(x, y)).epsilon(1e-9));
        Geodesic G = geodesic_through(x, y);
        double a = std::min(angular_dist(G.e1, xi), angular_dist(G.e2, xi));
        CHECK(a < 1e-8);
    }
}

TEST_CASE("approximation gap") {
    BoundaryPoint xi = random_boundary();
    for (int k = 0; k < 20; ++k) {
        Point x = random_point(1.0), y = random_point(1.0);
        CHECK(approximation_gap(xi, x, y, 20.0) <= 1e-7);
        // decreasing in t on a grid
        double prev = approximation_gap(xi, x, y, 1.0);
        for (double t : {3.0, 6.0, 10.0, 16.0}) {
            double g = approximation_gap(xi, x, y, t);
            CHECK(g <= prev + 1e-12);
            prev = g;
        }
    }
    // t = 0 gives |B + d|
    Point x = random_point(), y = random_point();
    CHECK(approximation_gap(xi, x, y, 0.0) ==
          doctest::Approx(std::fabs(busemann(xi, x, y) + dist(x, y))).epsilon(1e-9));
}

TEST_CASE("horoballs") {
    BoundaryPoint inf = BoundaryPoint::infinity();
    Point i1 = Point::half_plane(0, 1);
    Horoball H = horoball_through(inf, i1);
    CHECK(H.level == 0.0);
    CHECK(signed_dist_point(i1, H) == doctest::Approx(0.0));
    // H = {Im z >= 1}
    CHECK(signed_dist_point(Point::half_plane(0, 0.5), H) ==
          doctest::Approx(std::log(2)).epsilon(1e-12));
    CHECK(signed_dist_point(Point::half_plane(0, 2), H) ==
          doctest::Approx(-std::log(2)).epsilon(1e-12));
    CHECK(signed_dist_point(Point::half_plane(3.7, 1), H) == doctest::Approx(0.0));

    // membership along the central ray
    BoundaryPoint xi = random_boundary();
    Point x = random_point();
    Horoball Hx = horoball_through(xi, x);
    for (double t : {0.0, 0.7, 4.0})
        CHECK(signed_dist_point(point_on_ray(Ray(x, xi), t), Hx) <= 1e-12);

    // |signed distance| equals the distance to the horosphere
    for (int k = 0; k < 10; ++k) {
        Point p = random_point();
        double sd = signed_dist_point(p, Hx);
        auto [pp, qq] = xi.projective();
        Isometry send(pp, qq, -qq, pp);  // xi -> infinity
        Point px = send(x);
        double best = 1e300;
        for (int j = -400; j <= 400; ++j) {
            double s = j / 40.0;
            // horosphere {Im = Im px} in the image model
            Point hp = Point::half_plane(px.z.real() + s * px.z.imag(), px.z.imag());
            best = std::min(best, dist(p, send.inverse()(hp)));
        }
        CHECK(std::fabs(sd) <= best + 1e-6);
        CHECK(best <= std::fabs(sd) + 1e-3);  // the sampling is a coarse net
    }
}

TEST_CASE("signed_dist_horoballs") {
    BoundaryPoint xi = random_boundary();
    Point x = random_point();
    Horoball H = horoball_through(xi, x);
    CHECK(signed_dist_horoballs(H, H) == doctest::Approx(0.0));
    Horoball deeper{xi, x, 0.8};
    CHECK(signed_dist_horoballs(H, deeper) == doctest::Approx(0.8));
    CHECK(signed_dist_horoballs(deeper, H) == doctest::Approx(-0.8));
    Horoball other{random_boundary(), x, 0.0};
    if (angular_dist(other.center, xi) > 1e-6)
        CHECK_THROWS_AS(signed_dist_horoballs(H, other), DifferentCenters);

    // re-basing is exact on levels
    Point nb = random_point();
    Horoball rebased{xi, nb, H.level_from(nb)};
    Point probe = random_point();
    CHECK(signed_dist_point(probe, rebased) ==
          doctest::Approx(signed_dist_point(probe, H)).epsilon(1e-10));
}

TEST_CASE("gromov_bourdon") {
    Point o = Point::half_plane(0, 1);
    // base on the geodesic: both Busemann terms vanish
    CHECK(gromov_bourdon(o, BoundaryPoint::half_plane(-1), BoundaryPoint::half_plane(1)) ==
          doctest::Approx(1.0).epsilon(1e-10));
    BoundaryPoint xi = random_boundary();
    CHECK(gromov_bourdon(o, xi, xi) == doctest::Approx(0.0));

    // independence of the interior sample point
    for (int k = 0; k < 30; ++k) {
        BoundaryPoint eta = random_boundary(), zeta = random_boundary();
        if (angular_dist(eta, zeta) < 1e-3) continue;
        Point base = random_point();
        double ref = gromov_bourdon(base, eta, zeta);
        Geodesic C(eta, zeta);
        Point foot = project_to_geodesic(C, base);
        for (double s : {-2.0, -0.5, 0.7, 1.3, 2.9}) {
            Ray r(foot, C.e1);
            Point sample = s >= 0 ? point_on_ray(r, s) : point_on_ray(Ray(foot, C.e2), -s);
            double v = std::exp(
                -0.5 * std::fabs(busemann(eta, base, sample) + busemann(zeta, base, sample)));
            CHECK(v == doctest::Approx(ref).epsilon(1e-8));
        }
    }

    // metric axioms on random triples
    for (int k = 0; k < 1000; ++k) {
        Point base = Point::half_plane(0, 1);
        BoundaryPoint u = random_boundary(), v = random_boundary(), w = random_boundary();
        double duv = gromov_bourdon(base, u, v);
        CHECK(duv == doctest::Approx(gromov_bourdon(base, v, u)).epsilon(1e-10));
        CHECK(duv <= gromov_bourdon(base, u, w) + gromov_bourdon(base, w, v) + 1e-9);
    }
}

TEST_CASE("conformal transformation law") {
    Point o = Point::half_plane(0, 1);
    // identity and rotations about the base point have coefficient 1
    CHECK(conformal_coeff(Isometry::identity(), BoundaryPoint::half_plane(0.3), o) ==
          doctest::Approx(1.0));
    double th = 1.23;
    Isometry rot(std::cos(th / 2), std::sin(th / 2), -std::sin(th / 2), std::cos(th / 2));
    for (int k = 0; k < 5; ++k)
        CHECK(conformal_coeff(rot, random_boundary(), o) == doctest::Approx(1.0).epsilon(1e-10));

    // g: z -> 2z, zeta = infinity: B_inf(i, i/2) = -log 2
    Isometry dbl(std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0));
    CHECK(conformal_coeff(dbl, BoundaryPoint::infinity(), o) ==
          doctest::Approx(0.5).epsilon(1e-12));

    // the transformation law of the boundary metric
    for (int k = 0; k < 200; ++k) {
        Isometry g = random_isometry();
        BoundaryPoint eta = random_boundary(), zeta = random_boundary();
        if (angular_dist(eta, zeta) < 1e-3) continue;
        double lhs = gromov_bourdon(o, g(eta), g(zeta));
        double rhs = std::sqrt(conformal_coeff(g, eta, o)) *
                     std::sqrt(conformal_coeff(g, zeta, o)) * gromov_bourdon(o, eta, zeta);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
}

TEST_CASE("busemann max on geodesic and horoball tangency") {
    // signed distance from a geodesic to a horoball, against dense sampling
    for (int k = 0; k < 20; ++k) {
        BoundaryPoint xi = random_boundary();
        Point x = random_point(1.0);
        Horoball H = horoball_through(xi, x);
        BoundaryPoint e1 = random_boundary(), e2 = random_boundary();
        if (angular_dist(e1, e2) < 1e-2) continue;
        if (angular_dist(e1, xi) < 1e-2 || angular_dist(e2, xi) < 1e-2) continue;
        Geodesic C(e1, e2);
        double bmax = busemann_max_on_geodesic(xi, x, C);
        Point foot = project_to_geodesic(C, x);
        double best = -1e300;
        for (double s = -12; s <= 12; s += 0.01) {
            Point sample = s >= 0 ? point_on_ray(Ray(foot, C.e1), s)
                                  : point_on_ray(Ray(foot, C.e2), -s);
            best = std::max(best, busemann(xi, x, sample));
        }
        CHECK(bmax >= best - 1e-9);
        CHECK(bmax <= best + 1e-3);
        CHECK(signed_dist_geodesic(C, H) == doctest::Approx(-bmax).epsilon(1e-12));
    }
}
