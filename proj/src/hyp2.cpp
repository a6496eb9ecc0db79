#include "horolab/hyp2.hpp"

#include <cmath>
#include <cstdlib>
#include <algorithm>

namespace horolab {

Tolerances& tolerances() {
    static Tolerances tol = [] {
        Tolerances t;
        if (const char* s = std::getenv("HOROLAB_TOL")) {
            char* end = nullptr;
            double f = std::strtod(s, &end);
            if (end != s && f > 0) {
                double* first = &t.interior_margin;
                double* last = &t.holonomy + 1;
                for (double* p = first; p != last; ++p) *p *= f;
            }
        }
        return t;
    }();
    return tol;
}

void apply_env_tolerance_scale() { (void)tolerances(); }

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap_angle(double t) {
    t = std::fmod(t, 2 * kPi);
    if (t < 0) t += 2 * kPi;
    return t;
}

// acosh(1 + q), stable for small q.
double acosh1p(double q) {
    if (q <= 0) return 0.0;
    return std::log1p(q + std::sqrt(q * (q + 2.0)));
}

cplx cayley_to_disk(cplx z) { return (z - cplx(0, 1)) / (z + cplx(0, 1)); }
cplx cayley_to_half_plane(cplx w) { return cplx(0, 1) * (1.0 + w) / (1.0 - w); }

}  // namespace

// --- Point ------------------------------------------------------------------

Point::Point(Model m, cplx coord) : model(m), z(coord) {
    const double margin = tolerances().interior_margin;
    if (m == Model::Disk) {
        if (std::abs(coord) > 1.0 - margin)
            throw geometry_error("disk point too close to the ideal boundary");
    } else {
        if (coord.imag() < margin)
            throw geometry_error("half-plane point too close to the real axis");
    }
}

Point to_half_plane(const Point& p) {
    if (p.model == Model::HalfPlane) return p;
    return Point(Model::HalfPlane, cayley_to_half_plane(p.z));
}

Point to_disk(const Point& p) {
    if (p.model == Model::Disk) return p;
    return Point(Model::Disk, cayley_to_disk(p.z));
}

// --- BoundaryPoint ------------------------------------------------------------

BoundaryPoint BoundaryPoint::disk_angle(double theta) {
    BoundaryPoint b;
    b.theta = wrap_angle(theta);
    return b;
}

BoundaryPoint BoundaryPoint::half_plane(double u, bool is_inf) {
    // u = p/q maps to the unit circle via (p - iq)/(p + iq) = e^{-2i atan2(q,p)}.
    double p = is_inf ? 1.0 : u;
    double q = is_inf ? 0.0 : 1.0;
    return disk_angle(-2.0 * std::atan2(q, p));
}

std::array<double, 2> BoundaryPoint::projective() const {
    double phi = -theta / 2.0;
    return {std::cos(phi), std::sin(phi)};
}

bool BoundaryPoint::is_infinite() const {
    auto pq = projective();
    return std::abs(pq[1]) <= 1e-15;
}

double BoundaryPoint::half_plane_coord() const {
    auto pq = projective();
    if (std::abs(pq[1]) <= 1e-15) throw geometry_error("boundary point at infinity");
    return pq[0] / pq[1];
}

double angular_dist(const BoundaryPoint& a, const BoundaryPoint& b) {
    double d = std::fabs(wrap_angle(a.theta) - wrap_angle(b.theta));
    return std::min(d, 2 * kPi - d);
}

// --- Isometry -----------------------------------------------------------------

namespace {

// conj-first commutation: s(M z) = M* s(z) with s(z) = -conj(z).
std::array<double, 4> star(double a, double b, double c, double d) {
    return {a, -b, -c, d};
}

}  // namespace

Isometry::Isometry(double a_, double b_, double c_, double d_, bool rev)
    : a(a_), b(b_), c(c_), d(d_), reversing(rev) {
    double det = a * d - b * c;
    if (!(det > 0))
        throw geometry_error("isometry matrix must have positive determinant");
    double s = 1.0 / std::sqrt(det);
    a *= s; b *= s; c *= s; d *= s;
    const double* entries[4] = {&a, &b, &c, &d};
    for (const double* e : entries) {
        if (std::fabs(*e) > 1e-13) {
            if (*e < 0) { a = -a; b = -b; c = -c; d = -d; }
            break;
        }
    }
}

Isometry Isometry::inverse() const {
    // (M, r)^{-1} = (star^r(M^{-1}), r)
    double ia = d, ib = -b, ic = -c, id = a;
    if (reversing) {
        auto m = star(ia, ib, ic, id);
        return Isometry(m[0], m[1], m[2], m[3], true);
    }
    return Isometry(ia, ib, ic, id, false);
}

bool Isometry::is_identity(double tol) const {
    if (reversing) return false;
    return std::fabs(a - 1) <= tol && std::fabs(b) <= tol && std::fabs(c) <= tol &&
           std::fabs(d - 1) <= tol;
}

Isometry operator*(const Isometry& g, const Isometry& h) {
    double ha = h.a, hb = h.b, hc = h.c, hd = h.d;
    if (g.reversing) {
        auto m = star(ha, hb, hc, hd);
        ha = m[0]; hb = m[1]; hc = m[2]; hd = m[3];
    }
    return Isometry(g.a * ha + g.b * hc, g.a * hb + g.b * hd,
                    g.c * ha + g.d * hc, g.c * hb + g.d * hd,
                    g.reversing != h.reversing);
}

bool approx_equal(const Isometry& g, const Isometry& h, double tol) {
    if (g.reversing != h.reversing) return false;
    return std::fabs(g.a - h.a) <= tol && std::fabs(g.b - h.b) <= tol &&
           std::fabs(g.c - h.c) <= tol && std::fabs(g.d - h.d) <= tol;
}

Point Isometry::operator()(const Point& p) const {
    Point hp = to_half_plane(p);
    double x = hp.z.real(), y = hp.z.imag();
    if (reversing) x = -x;
    double cx = c * x + d;
    double den = cx * cx + c * c * y * y;
    double wx = ((a * x + b) * cx + a * c * y * y) / den;
    double wy = y / den;  // det = 1
    Point out(Model::HalfPlane, {wx, wy});
    return p.model == Model::Disk ? to_disk(out) : out;
}

BoundaryPoint Isometry::operator()(const BoundaryPoint& xi) const {
    auto pq = xi.projective();
    double p = pq[0], q = pq[1];
    if (reversing) p = -p;
    double np = a * p + b * q;
    double nq = c * p + d * q;
    return BoundaryPoint::disk_angle(-2.0 * std::atan2(nq, np));
}

IsometryClass classify(const Isometry& g) {
    if (g.reversing)
        throw geometry_error("classification applies to orientation-preserving isometries");
    const double tol = tolerances().classify;
    if (g.is_identity(tol)) return IsometryClass::Identity;
    double t = std::fabs(g.trace());
    if (t > 2 + tol) return IsometryClass::Hyperbolic;
    if (t < 2 - tol) return IsometryClass::Elliptic;
    return IsometryClass::Parabolic;
}

double translation_length(const Isometry& g) {
    double t = std::fabs(g.trace()) / 2.0;
    if (t <= 1.0) return 0.0;
    return 2.0 * std::acosh(t);
}

std::array<BoundaryPoint, 2> boundary_fixed_points(const Isometry& g) {
    if (g.reversing) throw geometry_error("fixed points of a reversing isometry");
    // c u^2 + (d - a) u - b = 0, projectively.
    double scale = std::max({std::fabs(g.a), std::fabs(g.b), std::fabs(g.c), std::fabs(g.d)});
    double disc = g.trace() * g.trace() - 4.0;
    if (disc < 0) throw geometry_error("elliptic isometry has no boundary fixed points");
    double sq = std::sqrt(std::max(0.0, disc));
    if (std::fabs(g.c) > 1e-14 * scale) {
        double r1 = (g.a - g.d + sq) / (2 * g.c);
        double r2 = (g.a - g.d - sq) / (2 * g.c);
        return {BoundaryPoint::half_plane(r1), BoundaryPoint::half_plane(r2)};
    }
    BoundaryPoint inf = BoundaryPoint::infinity();
    if (std::fabs(g.d - g.a) > 1e-14 * scale)
        return {inf, BoundaryPoint::half_plane(g.b / (g.d - g.a))};
    return {inf, inf};  // parabolic fixing infinity
}

// --- Geodesic -----------------------------------------------------------------

Geodesic::Geodesic(BoundaryPoint a, BoundaryPoint b) : e1(a), e2(b) {
    if (angular_dist(a, b) < tolerances().geodesic_min_sep)
        throw geometry_error("geodesic endpoints coincide");
}

Isometry reflect(const Geodesic& C) {
    auto [p1, q1] = C.e1.projective();
    auto [p2, q2] = C.e2.projective();
    // Reflection across the geodesic with feet (p1:q1), (p2:q2); uniform in
    // the vertical-line case q = 0.
    double s = p1 * q2 + p2 * q1;
    double m00 = s, m01 = 2 * p1 * p2, m10 = 2 * q1 * q2, m11 = s;
    return Isometry(m00, m01, m10, m11, true);
}

// --- metric -------------------------------------------------------------------

double dist(const Point& p, const Point& q) {
    if (p.model == Model::Disk && q.model == Model::Disk) {
        double num = std::norm(p.z - q.z);
        double den = (1 - std::norm(p.z)) * (1 - std::norm(q.z));
        return acosh1p(2 * num / den);
    }
    Point a = to_half_plane(p), b = to_half_plane(q);
    double num = std::norm(a.z - b.z);
    double den = 2 * a.z.imag() * b.z.imag();
    return acosh1p(num / den);
}

namespace {

// Isometry mapping p to the half-plane base point i.
Isometry center_at(const Point& p) {
    Point hp = to_half_plane(p);
    double u = hp.z.real(), v = hp.z.imag();
    double sv = std::sqrt(v);
    return Isometry(1.0 / sv, -u / sv, 0.0, sv);
}

// Isometry mapping p to i and xi to infinity.
Isometry standard_position(const Point& p, const BoundaryPoint& xi) {
    auto [pp, qq] = xi.projective();
    Isometry send_inf(pp, qq, -qq, pp);
    Isometry h = center_at(send_inf(p)) * send_inf;
    return h;
}

}  // namespace

Point point_on_ray(const Ray& r, double t) {
    if (t < 0) throw geometry_error("ray parameter must be nonnegative");
    Isometry h = standard_position(r.origin, r.endpoint);
    Point p = h.inverse()(Point(Model::HalfPlane, {0.0, std::exp(t)}));
    return r.origin.model == Model::Disk ? to_disk(p) : p;
}

double angle_at(const Point& p, const Point& q1, const Point& q2) {
    Isometry h = center_at(p);
    cplx w1 = cayley_to_disk(to_half_plane(h(q1)).z);
    cplx w2 = cayley_to_disk(to_half_plane(h(q2)).z);
    if (std::abs(w1) < 1e-14 || std::abs(w2) < 1e-14)
        throw geometry_error("angle at coincident points");
    double d = std::fabs(std::arg(w1) - std::arg(w2));
    if (d > kPi) d = 2 * kPi - d;
    return d;
}

double angle_with_ray(const Ray& r, const Point& q) {
    Isometry h = center_at(r.origin);
    cplx w = cayley_to_disk(to_half_plane(h(q)).z);
    if (std::abs(w) < 1e-14) throw geometry_error("angle at coincident points");
    double d = std::fabs(h(r.endpoint).theta - std::arg(w));
    d = std::fmod(d, 2 * kPi);
    if (d > kPi) d = 2 * kPi - d;
    return d;
}

// --- geodesic constructions ----------------------------------------------------

Geodesic geodesic_through(const Point& p, const Point& q) {
    Isometry h = center_at(p);
    Isometry hi = h.inverse();
    cplx w = to_half_plane(h(q)).z;
    // geodesic through i and w
    if (std::fabs(w.real()) < 1e-13 * std::abs(w)) {
        return Geodesic(hi(BoundaryPoint::half_plane(0.0)), hi(BoundaryPoint::infinity()));
    }
    double m = (std::norm(w) - 1.0) / (2.0 * w.real());
    double rho = std::sqrt(m * m + 1.0);
    return Geodesic(hi(BoundaryPoint::half_plane(m - rho)),
                    hi(BoundaryPoint::half_plane(m + rho)));
}

Geodesic geodesic_from(const Point& p, const BoundaryPoint& xi) {
    // Second endpoint = image of xi under the half-turn about p.
    Isometry h = center_at(p);
    Isometry half_turn = h.inverse() * Isometry(0, 1, -1, 0) * h;
    return Geodesic(xi, half_turn(xi));
}

Point midpoint(const Point& p, const Point& q) {
    double d = dist(p, q);
    if (d < 1e-15) return p;
    Geodesic G = geodesic_through(p, q);
    // pick the endpoint on q's side of p
    Ray r1(p, G.e1);
    double a = angle_with_ray(r1, q);
    Ray r = (a < kPi / 2) ? r1 : Ray(p, G.e2);
    return point_on_ray(r, d / 2.0);
}

Point project_to_geodesic(const Geodesic& C, const Point& p) {
    Point mirror = reflect(C)(p);
    if (dist(p, mirror) < 1e-15) return p;
    return midpoint(p, mirror);
}

double dist_to_geodesic(const Point& p, const Geodesic& C) {
    return dist(p, reflect(C)(p)) / 2.0;
}

Geodesic perpendicular_bisector(const Point& p, const Point& q) {
    if (dist(p, q) < 1e-14) throw geometry_error("perpendicular bisector of equal points");
    Point mid = midpoint(p, q);
    // bisector = geodesic through mid perpendicular to [p, q]
    Isometry h = center_at(mid);
    cplx w = cayley_to_disk(to_half_plane(h(q)).z);
    double dir = std::arg(w);
    Isometry hi = h.inverse();
    // diameter through the disk center orthogonal to the direction of q
    BoundaryPoint b1 = hi(BoundaryPoint::disk_angle(dir + kPi / 2));
    BoundaryPoint b2 = hi(BoundaryPoint::disk_angle(dir - kPi / 2));
    return Geodesic(b1, b2);
}

GeodesicRelation relate(const Geodesic& C, const Geodesic& Cp) {
    Isometry r = reflect(C) * reflect(Cp);
    const double tol = tolerances().classify;
    if (r.is_identity(1e-12)) throw NotUltraparallel("identical geodesics");
    double t = std::fabs(r.trace());
    if (t > 2 + tol) return GeodesicRelation::Ultraparallel;
    if (t < 2 - tol) return GeodesicRelation::Intersecting;
    return GeodesicRelation::Asymptotic;
}

double dist_geodesics(const Geodesic& C, const Geodesic& Cp) {
    Isometry r = reflect(C) * reflect(Cp);
    double t = std::fabs(r.trace()) / 2.0;
    if (t <= 1.0) return 0.0;
    return std::acosh(t);
}

Geodesic common_perpendicular(const Geodesic& C, const Geodesic& Cp) {
    Isometry r = reflect(C) * reflect(Cp);
    if (r.is_identity(1e-12)) throw NotUltraparallel("identical geodesics");
    double t = std::fabs(r.trace());
    if (t <= 2 + tolerances().classify)
        throw NotUltraparallel("geodesics intersect or are asymptotic");
    auto fixed = boundary_fixed_points(r);
    return Geodesic(fixed[0], fixed[1]);
}

namespace {

// Interior fixed point of an elliptic isometry.
Point elliptic_fixed_point(const Isometry& g) {
    // roots of c z^2 + (d - a) z - b = 0 with positive imaginary part
    double A = g.c, B = g.d - g.a, Cc = -g.b;
    if (std::fabs(A) < 1e-15) throw geometry_error("degenerate elliptic fixed point");
    cplx disc = cplx(B * B - 4 * A * Cc, 0.0);
    cplx sq = std::sqrt(disc);
    cplx z1 = (-B + sq) / (2 * A);
    cplx z2 = (-B - sq) / (2 * A);
    cplx z = (z1.imag() > 0) ? z1 : z2;
    return Point(Model::HalfPlane, z);
}

}  // namespace

Isometry pair_geodesics(const Geodesic& C, const Geodesic& Cp, const Point& base,
                        double tol_pair) {
    Geodesic axis = common_perpendicular(C, Cp);  // throws NotUltraparallel
    double dc = dist_to_geodesic(base, C);
    double dcp = dist_to_geodesic(base, Cp);
    if (std::fabs(dc - dcp) > tol_pair)
        throw AsymmetricBase("base point is not equidistant from the two geodesics");
    Point foot_c = elliptic_fixed_point(reflect(C) * reflect(axis));
    Point foot_cp = elliptic_fixed_point(reflect(Cp) * reflect(axis));
    Geodesic mid = perpendicular_bisector(foot_c, foot_cp);
    return reflect(mid) * reflect(C);
}

// --- classical trigonometry -----------------------------------------------------

double divergence_gap(double t, double eps) {
    if (t < 0 || eps < 0) throw geometry_error("divergence_gap needs t, eps >= 0");
    if (t == 0 || eps == 0) return 0.0;
    return std::asinh(std::cosh(eps) * std::sinh(t)) - t;
}

HexagonSides solve_right_hexagon(double a, double b, double c) {
    if (!(a > 0 && b > 0 && c > 0)) throw HexagonInfeasible("sides must be positive");
    auto opposite = [](double x, double y, double z) {
        double v = (std::cosh(x) + std::cosh(y) * std::cosh(z)) /
                   (std::sinh(y) * std::sinh(z));
        if (!(v > 1.0) || !std::isfinite(v)) throw HexagonInfeasible("no hexagon with these sides");
        return std::acosh(v);
    };
    HexagonSides h;
    h.a = a; h.b = b; h.c = c;
    h.alpha = opposite(a, b, c);
    h.beta = opposite(b, c, a);
    h.gamma = opposite(c, a, b);
    return h;
}

HexagonDevelopment develop_hexagon(const std::array<double, 6>& sides) {
    // Frame turtle: walk along the imaginary axis, then turn -pi/2 (into Re>0).
    auto walk = [](double s) {
        return Isometry(std::exp(s / 2), 0, 0, std::exp(-s / 2));
    };
    const double ch = std::cos(-kPi / 4), sh = std::sin(-kPi / 4);
    Isometry turn(ch, sh, -sh, ch);
    Isometry frame;
    HexagonDevelopment dev;
    Point base(Model::HalfPlane, {0.0, 1.0});
    for (int k = 0; k < 6; ++k) {
        dev.vertex[k] = frame(base);
        frame = frame * walk(sides[k]) * turn;
    }
    double defect = 0;
    double sgn = frame.a + frame.d >= 0 ? 1.0 : -1.0;
    defect = std::max({std::fabs(sgn * frame.a - 1), std::fabs(sgn * frame.b),
                       std::fabs(sgn * frame.c), std::fabs(sgn * frame.d - 1)});
    dev.closure_defect = frame.reversing ? 1.0 : defect;
    return dev;
}

// --- ray utilities ---------------------------------------------------------------

double dist_to_ray(const Point& p, const Ray& r) {
    Geodesic line = geodesic_from(r.origin, r.endpoint);
    Point foot = project_to_geodesic(line, p);
    // signed position of the foot along the ray: positive toward the endpoint
    Isometry h = standard_position(r.origin, r.endpoint);
    double pos = std::log(to_half_plane(h(foot)).z.imag());
    if (pos >= 0) return dist_to_geodesic(p, line);
    return dist(p, r.origin);
}

// --- model conversion of isometries ----------------------------------------------

std::array<cplx, 4> disk_matrix(const Isometry& g) {
    // Cayley conjugation  D = C M C^{-1},  C = [[1, -i], [1, i]].
    cplx i(0, 1);
    cplx a(g.a), b(g.b), c(g.c), d(g.d);
    // C M = [[a - i c, b - i d], [a + i c, b + i d]]
    cplx m00 = a - i * c, m01 = b - i * d, m10 = a + i * c, m11 = b + i * d;
    // C^{-1} = 1/(2i) [[i, i], [-1, 1]]
    cplx s = 1.0 / (2.0 * i);
    return {s * (m00 * i + m01 * (-1.0)), s * (m00 * i + m01 * 1.0),
            s * (m10 * i + m11 * (-1.0)), s * (m10 * i + m11 * 1.0)};
}

Isometry from_disk_matrix(const std::array<cplx, 4>& m, bool reversing) {
    // inverse Cayley conjugation; the result is real up to a unimodular factor
    cplx i(0, 1);
    // D C with C = [[1, -i], [1, i]]
    cplx n00 = (m[0] * 1.0 + m[1] * 1.0);
    cplx n01 = (m[0] * (-i) + m[1] * i);
    cplx n10 = (m[2] * 1.0 + m[3] * 1.0);
    cplx n11 = (m[2] * (-i) + m[3] * i);
    // C^{-1} (D C) with C^{-1} = 1/(2i) [[i, i], [-1, 1]]
    cplx s = 1.0 / (2.0 * i);
    cplx p00 = s * (i * n00 + i * n10);
    cplx p01 = s * (i * n01 + i * n11);
    cplx p10 = s * (-n00 + n10);
    cplx p11 = s * (-n01 + n11);
    // strip a common phase: normalize by the entry of largest modulus
    cplx entries[4] = {p00, p01, p10, p11};
    int best = 0;
    for (int k = 1; k < 4; ++k)
        if (std::abs(entries[k]) > std::abs(entries[best])) best = k;
    cplx phase = entries[best] / std::abs(entries[best]);
    for (auto& e : entries) e /= phase;
    return Isometry(entries[0].real(), entries[1].real(), entries[2].real(),
                    entries[3].real(), reversing);
}

}  // namespace horolab
