#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace perdet {

// Adaptive Gauss-Kronrod 7-15 on [a, b] for complex-valued integrands.
// Error estimate |G7 - K15| with recursive bisection.
struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    int evaluations = 0;
};

QuadResult integrate_gk(const std::function<std::complex<double>(double)>& f, double a, double b,
                        double abs_tol = 1e-12, int max_depth = 24);

// Integral of f along the straight segment z0 -> z1.
QuadResult integrate_segment(const std::function<std::complex<double>(std::complex<double>)>& f,
                             std::complex<double> z0, std::complex<double> z1,
                             double abs_tol = 1e-12);

namespace detail {

// K15 nodes/weights on [-1,1]; G7 weights on the odd-indexed nodes.
inline constexpr double kK15Nodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
inline constexpr double kK15Weights[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double kG7Weights[7] = {0.129484966168870, 0.279705391489277,
                                         0.381830050505119, 0.417959183673469,
                                         0.381830050505119, 0.279705391489277,
                                         0.129484966168870};

}  // namespace detail

inline QuadResult integrate_gk(const std::function<std::complex<double>(double)>& f, double a,
                               double b, double abs_tol, int max_depth) {
    using C = std::complex<double>;
    struct Panel {
        double a, b;
        int depth;
    };
    auto panel_eval = [&](double pa, double pb, C& k15, double& err) {
        double mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
        C g7(0.0, 0.0);
        k15 = C(0.0, 0.0);
        for (int i = 0; i < 15; ++i) {
            C v = f(mid + half * detail::kK15Nodes[i]);
            k15 += detail::kK15Weights[i] * v;
            if (i % 2 == 1) g7 += detail::kG7Weights[i / 2] * v;
        }
        k15 *= half;
        g7 *= half;
        err = std::abs(k15 - g7);
    };
    QuadResult out;
    std::vector<Panel> stack{{a, b, 0}};
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        C k15;
        double err;
        panel_eval(p.a, p.b, k15, err);
        out.evaluations += 15;
        double local_tol = abs_tol * (p.b - p.a) / (b - a);
        if (err <= std::max(local_tol, 1e-16) || p.depth >= max_depth) {
            out.value += k15;
            out.error += err;
        } else {
            double mid = 0.5 * (p.a + p.b);
            stack.push_back({p.a, mid, p.depth + 1});
            stack.push_back({mid, p.b, p.depth + 1});
        }
    }
    return out;
}

inline QuadResult integrate_segment(
    const std::function<std::complex<double>(std::complex<double>)>& f, std::complex<double> z0,
    std::complex<double> z1, double abs_tol) {
    std::complex<double> dz = z1 - z0;
    auto g = [&](double s) { return f(z0 + s * dz) * dz; };
    return integrate_gk(g, 0.0, 1.0, abs_tol);
}

}  // namespace perdet
