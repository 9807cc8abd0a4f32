#pragma once

#include "perdet/connection.hpp"

#include <complex>
#include <vector>

namespace perdet {

using Polyline = std::vector<Complex>;  // vertices, straight segments between

struct PathPlanOptions {
    std::optional<Complex> base_override;
    double disc_scale = 1.0;  // scales the default disc radius
    double infinity_radius_factor = 40.0;
    int circle_segments = 64;
};

// Deterministic path system: base point below the real axis, straight paths
// to per-singularity anchors on the disc boundaries (with automatic detours
// around intervening discs), one path to a far anchor toward infinity.
// A branch ledger of continued log(t - lambda_i) and log t is kept per path.
struct PathPlan {
    Complex base;
    double disc_radius = 0.0;
    std::vector<Complex> lambdas;   // finite singular points as complex
    std::vector<Complex> anchors;   // on the disc boundaries
    Complex inf_anchor;
    std::vector<Polyline> paths;    // base -> anchors[i]
    Polyline path_inf;              // base -> inf_anchor

    // ledger: continued log(t - center) along a polyline starting from the
    // principal branch at its first vertex
    static Complex continue_log(const Polyline& path, Complex center);
    // continued log t along a polyline (center 0)
    static Complex continue_log0(const Polyline& path) { return continue_log(path, Complex(0, 0)); }

    // positively oriented circle around lambdas[i] as a closed polyline
    // starting and ending at anchors[i]
    Polyline circle(size_t i) const;
    // loop base -> anchor -> circle -> anchor -> base
    Polyline standard_loop(size_t i) const;
    // clockwise circle of radius |inf_anchor| through inf_anchor (a positive
    // loop around infinity), as a closed polyline from inf_anchor
    Polyline infinity_circle() const;

    bool branch_convention_holds(double tol = 1e-9) const;
};

PathPlan default_plan(const LogConnection& conn, const PathPlanOptions& opt = {});

double distance_point_segment(Complex p, Complex a, Complex b);

}  // namespace perdet
