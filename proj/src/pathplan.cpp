#include "perdet/pathplan.hpp"

#include <cmath>
#include <stdexcept>

namespace perdet {

double distance_point_segment(Complex p, Complex a, Complex b) {
    Complex ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

Complex PathPlan::continue_log(const Polyline& path, Complex center) {
    if (path.empty()) throw std::invalid_argument("empty path");
    Complex val = std::log(path.front() - center);
    for (size_t k = 0; k + 1 < path.size(); ++k) {
        Complex r = (path[k + 1] - center) / (path[k] - center);
        val += std::log(r);  // |delta arg| < pi on a straight segment off the center
    }
    return val;
}

Polyline PathPlan::circle(size_t i) const {
    Polyline c;
    int n = 64;
    double a0 = std::arg(anchors[i] - lambdas[i]);
    for (int k = 0; k <= n; ++k) {
        double a = a0 + 2.0 * M_PI * k / n;
        c.push_back(lambdas[i] + disc_radius * std::polar(1.0, a));
    }
    c.back() = anchors[i];  // close exactly
    return c;
}

Polyline PathPlan::standard_loop(size_t i) const {
    Polyline loop = paths[i];
    Polyline cir = circle(i);
    loop.insert(loop.end(), cir.begin() + 1, cir.end());
    loop.insert(loop.end(), paths[i].rbegin() + 1, paths[i].rend());
    return loop;
}

Polyline PathPlan::infinity_circle() const {
    Polyline c;
    int n = 96;
    double radius = std::abs(inf_anchor);
    double a0 = std::arg(inf_anchor);
    for (int k = 0; k <= n; ++k) {
        double a = a0 - 2.0 * M_PI * k / n;  // clockwise = positive around infinity
        c.push_back(radius * std::polar(1.0, a));
    }
    c.back() = inf_anchor;
    return c;
}

bool PathPlan::branch_convention_holds(double tol) const {
    // log(t(b_inf) - lambda) - log(t(b_inf)) must equal the principal
    // log(1 - lambda/b_inf) after continuation along the infinity path
    const Polyline& p = path_inf;
    for (size_t i = 0; i < lambdas.size(); ++i) {
        Complex lhs = continue_log(p, lambdas[i]) - continue_log0(p);
        Complex rhs = std::log(1.0 - lambdas[i] / inf_anchor);
        if (std::abs(lhs - rhs) > tol) return false;
    }
    return true;
}

namespace {

// Straight path with recursive detours below intervening discs.
void build_avoiding(Polyline& out, Complex from, Complex to, const std::vector<Complex>& lambdas,
                    Complex target_anchor_center, double rho, int depth) {
    if (depth > 8) throw std::runtime_error("path planning failed to avoid discs");
    for (const auto& lam : lambdas) {
        if (std::abs(lam - target_anchor_center) < 1e-15) continue;
        if (std::abs(from - lam) < 1e-15 || std::abs(to - lam) < 1e-15) continue;
        if (distance_point_segment(lam, from, to) < 0.95 * rho) {
            // detour through a vertex pushed away from lam, on the base side
            Complex mid = 0.5 * (from + to);
            Complex dir = mid - lam;
            if (std::abs(dir) < 1e-12) dir = Complex(0.0, -1.0);
            dir /= std::abs(dir);
            Complex via = lam + 2.5 * rho * dir;
            build_avoiding(out, from, via, lambdas, target_anchor_center, rho, depth + 1);
            build_avoiding(out, via, to, lambdas, target_anchor_center, rho, depth + 1);
            return;
        }
    }
    out.push_back(to);
}

}  // namespace

PathPlan default_plan(const LogConnection& conn, const PathPlanOptions& opt) {
    conn.validate();
    PathPlan plan;
    plan.lambdas.reserve(conn.points.size());
    double maxabs = 0.0;
    for (const auto& p : conn.points) {
        Complex z(to_double(p), 0.0);
        plan.lambdas.push_back(z);
        maxabs = std::max(maxabs, std::abs(z));
    }
    double mind = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < plan.lambdas.size(); ++i)
        for (size_t j = i + 1; j < plan.lambdas.size(); ++j)
            mind = std::min(mind, std::abs(plan.lambdas[i] - plan.lambdas[j]));
    if (!std::isfinite(mind)) mind = 1.0;  // single singular point
    plan.disc_radius = 0.25 * mind * opt.disc_scale;
    plan.base = opt.base_override.value_or(Complex(0.0, -(1.0 + maxabs)));
    plan.inf_anchor = plan.base / std::abs(plan.base) *
                      (opt.infinity_radius_factor * (1.0 + maxabs));

    for (size_t i = 0; i < plan.lambdas.size(); ++i) {
        Complex anchor = plan.lambdas[i] - Complex(0.0, plan.disc_radius);
        // keep the anchor on the side of the base point for off-axis bases
        plan.anchors.push_back(anchor);
        Polyline path{plan.base};
        build_avoiding(path, plan.base, anchor, plan.lambdas, plan.lambdas[i], plan.disc_radius, 0);
        plan.paths.push_back(std::move(path));
    }
    plan.path_inf = {plan.base, plan.inf_anchor};
    return plan;
}

}  // namespace perdet
