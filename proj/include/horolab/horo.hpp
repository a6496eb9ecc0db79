#pragma once

#include "horolab/hyp2.hpp"

// Busemann cocycles and functions on H^2, horoballs with signed distances,
// and the boundary visual metric with its conformal transformation law.
//
// Sign convention: B_xi(x, y) grows as y moves toward xi, so that
// B(o, alpha(t)) = t along the ray [o, xi].

namespace horolab {

struct DifferentCenters : geometry_error {
    using geometry_error::geometry_error;
};

// b_P(x, y) = d(x, P) - d(P, y)
double cocycle(const Point& P, const Point& x, const Point& y);

// Closed form of lim_{t->inf} b_{[x,xi](t)}(x, y).  In the half-plane, for
// xi = (p : q) with p^2 + q^2 = 1:
//     B = log(Im y / Im x) + log|q x - p|^2 - log|q y - p|^2
// which reduces to log(Im y / Im x) at q = 0 (xi = infinity).  Validated
// against the cocycle limit by the test suite before anything builds on it.
double busemann(const BoundaryPoint& xi, const Point& x, const Point& y);

// |busemann(xi,x,y) - cocycle(point_on_ray([x,xi], t), x, y)|
double approximation_gap(const BoundaryPoint& xi, const Point& x, const Point& y, double t);

struct Horoball {
    BoundaryPoint center;
    Point base;
    double level = 0;  // the ball is {y : B_center(base, y) >= level}

    // Level of the same ball relative to another base point.
    double level_from(const Point& new_base) const;
    // Euclidean radius of the disk-model circle representing the ball.
    double euclidean_radius() const;
};

Horoball horoball_through(const BoundaryPoint& xi, const Point& x);

// Positive outside the ball, negative inside, zero on the horosphere.
double signed_dist_point(const Point& x, const Horoball& H);

// rho(H, H') for concentric horoballs: positive when H contains H'.
double signed_dist_horoballs(const Horoball& H, const Horoball& Hp);

// Largest value of B_xi(base, .) over a geodesic; +infinity if xi is an
// endpoint of the geodesic.
double busemann_max_on_geodesic(const BoundaryPoint& xi, const Point& base, const Geodesic& C);

// Signed distance from a geodesic to a horoball (positive when disjoint).
double signed_dist_geodesic(const Geodesic& C, const Horoball& H);

// Visual (Gromov-Bourdon) metric with base point o:
//     D_o(eta, xi) = exp(-1/2 |B_eta(o, x) + B_xi(o, x)|),  x on [eta, xi].
double gromov_bourdon(const Point& o, const BoundaryPoint& eta, const BoundaryPoint& xi);

// Conformal coefficient g'(zeta) = exp(B_zeta(o, g^{-1} o)).
double conformal_coeff(const Isometry& g, const BoundaryPoint& zeta, const Point& o);

}  // namespace horolab
