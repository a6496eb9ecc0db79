#pragma once

namespace horolab {

// All numeric tolerances live here. Values are absolute unless noted.
// HOROLAB_TOL=<factor> scales every entry at startup (see tolerances()).
struct Tolerances {
    double interior_margin   = 1e-12;  // min distance of a Point from the ideal boundary
    double boundary_roundtrip= 1e-10;  // disk <-> half-plane boundary conversions
    double point_roundtrip   = 1e-12;  // disk <-> half-plane point conversions
    double matrix_canon      = 1e-12;  // matrix identities after canonicalization
    double dist_invariance   = 1e-9;
    double classify          = 1e-9;   // |tr| vs 2 for parabolic detection
    double geodesic_min_sep  = 1e-10;  // min angular separation of geodesic endpoints
    double angle_invariance  = 1e-9;
    double perpendicular     = 1e-8;   // right-angle checks
    double endpoint_match    = 1e-8;   // angular, for g(C) = C' style checks
    double pair_base         = 1e-9;   // equidistance precondition of geodesic pairing
    double hexagon_residual  = 1e-9;   // cyclic relations of the right-angled hexagon
    double hexagon_closure   = 1e-8;   // matrix development of the hexagon
    double busemann_oracle   = 1e-8;   // closed form vs cocycle at large t
    double cocycle_identity  = 1e-10;
    double gb_spread         = 1e-8;   // boundary metric: independence of the interior sample
    double dedup             = 1e-9;   // entry-wise matrix distance for orbit dedup
    double dirichlet         = 1e-9;   // default tol for Dirichlet-point queries
    double near_boundary_angle = 1e-9; // below this angular separation boundary points merge
    double stage_tangency    = 1e-9;   // flute constructions: tangency residuals
    double holonomy          = 1e-7;   // ladder cuff holonomy lengths
};

// Mutable global record (single-threaded mutation at startup only).
Tolerances& tolerances();

// Applies the HOROLAB_TOL scale factor from the environment, if set.
// Called once from tolerances(); safe to call again.
void apply_env_tolerance_scale();

}  // namespace horolab
