#include "perdet/periods.hpp"

#include "perdet/quadrature.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace perdet {

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

using State = std::vector<Complex>;

// Generic adaptive DP45 over s in [0, 1] (or decreasing), complex state.
struct OdeResult {
    State y;
    int steps = 0;
};

OdeResult dp45(const std::function<void(double, const State&, State&)>& f, State y0, double s0,
               double s1, double rtol, double atol) {
    State y = std::move(y0);
    size_t n = y.size();
    State k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), y5(n);
    double s = s0;
    double dir = (s1 >= s0) ? 1.0 : -1.0;
    double h = dir * std::max(1e-6, std::abs(s1 - s0) * 1e-3);
    int steps = 0;
    f(s, y, k1);
    bool fsal_valid = true;
    while (dir * (s1 - s) > 1e-16 * std::abs(s1 - s0)) {
        if (dir * (s + h - s1) > 0) h = s1 - s;
        if (!fsal_valid) f(s, y, k1);
        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
        f(s + c2 * h, yt, k2);
        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(s + c3 * h, yt, k3);
        for (size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(s + c4 * h, yt, k4);
        for (size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(s + c5 * h, yt, k5);
        for (size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        f(s + h, yt, k6);
        for (size_t i = 0; i < n; ++i)
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        f(s + h, y5, k7);
        double err = 0.0;
        for (size_t i = 0; i < n; ++i) {
            Complex de = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                              e7 * k7[i]);
            double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(de) / sc);
        }
        if (err <= 1.0) {
            s += h;
            y.swap(y5);
            k1.swap(k7);
            fsal_valid = true;
            ++steps;
            if (steps > 2000000) throw std::runtime_error("transport: step budget exhausted");
        } else {
            fsal_valid = false;
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        fac = std::clamp(fac, 0.2, 5.0);
        h *= fac;
        if (std::abs(h) < 1e-15 * std::abs(s1 - s0))
            throw std::runtime_error("transport: step underflow near a singularity");
    }
    return {std::move(y), steps};
}

}  // namespace

ConnectionNumeric::ConnectionNumeric(const LogConnection& conn) {
    conn.validate();
    rank = conn.rank;
    for (const auto& p : conn.points) lambdas.emplace_back(to_double(p), 0.0);
    for (const auto& m : conn.residues) {
        CMatrix b(rank, rank);
        for (size_t i = 0; i < rank; ++i)
            for (size_t j = 0; j < rank; ++j) b(i, j) = Complex(to_double(m(i, j)), 0.0);
        B.push_back(std::move(b));
    }
}

CMatrix ConnectionNumeric::A(Complex t) const {
    CMatrix a(rank, rank);
    for (size_t i = 0; i < lambdas.size(); ++i) {
        Complex f = 1.0 / (t - lambdas[i]);
        for (size_t r = 0; r < rank; ++r)
            for (size_t c = 0; c < rank; ++c) a(r, c) += f * B[i](r, c);
    }
    return a;
}

Complex ConnectionNumeric::trace_A(Complex t) const {
    Complex s(0.0, 0.0);
    for (size_t i = 0; i < lambdas.size(); ++i) {
        Complex tr(0.0, 0.0);
        for (size_t r = 0; r < rank; ++r) tr += B[i](r, r);
        s += tr / (t - lambdas[i]);
    }
    return s;
}

CMatrix ConnectionNumeric::B_infinity() const {
    CMatrix s(rank, rank);
    for (const auto& b : B) s = s + b;
    return Complex(-1.0, 0.0) * s;
}

CMatrix transport(const ConnectionNumeric& conn, const Polyline& path, const CMatrix& Y0,
                  const TransportOptions& opt) {
    size_t r = conn.rank;
    State y(Y0.data(), Y0.data() + Y0.size());
    for (size_t seg = 0; seg + 1 < path.size(); ++seg) {
        Complex z0 = path[seg], dz = path[seg + 1] - path[seg];
        if (dz == Complex(0.0, 0.0)) continue;
        auto f = [&](double s, const State& ys, State& out) {
            CMatrix a = conn.A(z0 + s * dz);
            // out = -dz * a * Y
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) {
                    Complex acc(0.0, 0.0);
                    for (size_t k = 0; k < r; ++k) acc += a(i, k) * ys[k * r + j];
                    out[i * r + j] = -dz * acc;
                }
        };
        y = dp45(f, std::move(y), 0.0, 1.0, opt.rtol, opt.atol).y;
    }
    CMatrix out(r, r);
    std::copy(y.begin(), y.end(), out.data());
    return out;
}

CMatrix transport(const LogConnection& conn, const Polyline& path, const CMatrix& Y0,
                  const TransportOptions& opt) {
    return transport(ConnectionNumeric(conn), path, Y0, opt);
}

CMatrix monodromy(const LogConnection& conn, size_t i, const PathPlan& plan,
                  const TransportOptions& opt) {
    return transport(conn, plan.standard_loop(i), CMatrix::identity(conn.rank), opt);
}

CMatrix monodromy_infinity(const LogConnection& conn, const PathPlan& plan,
                           const TransportOptions& opt) {
    Polyline loop = plan.path_inf;
    Polyline cir = plan.infinity_circle();
    loop.insert(loop.end(), cir.begin() + 1, cir.end());
    loop.insert(loop.end(), plan.path_inf.rbegin() + 1, plan.path_inf.rend());
    return transport(conn, loop, CMatrix::identity(conn.rank), opt);
}

DeRhamBasis de_rham_basis(const LogConnection& conn) {
    conn.validate();
    QMatrix binf = conn.residue_infinity();
    if (binf.det() == 0) throw std::domain_error("de_rham_basis: res_inf is singular");
    if (conn.points.size() < 2) throw std::domain_error("de_rham_basis: need at least 2 points");
    return DeRhamBasis{conn.points.size(), conn.rank};
}

std::vector<CMatrix> betti_frames(const LogConnection& conn, const PathPlan& plan,
                                  const TransportOptions& opt) {
    ConnectionNumeric num(conn);
    std::vector<CMatrix> out;
    for (const auto& path : plan.paths)
        out.push_back(transport(num, path, CMatrix::identity(conn.rank), opt));
    return out;
}

namespace {

// Integrate the dual system W' = W A together with the pairing accumulators
// along one straight segment (possibly reparametrized for improper ends).
// Forms are indexed by (xp, k): v_{xp,k}(t) = (1/(t-l_xp) - 1/(t-l_last)) e_k.
// State layout: [W (r*r) | integrals (nforms*r)]; integral (m, j) accumulates
// the pairing of dual row j against form m.
struct DualChainIntegrator {
    const ConnectionNumeric& conn;
    const TransportOptions& opt;
    size_t r, d, nforms;
    int steps = 0;

    DualChainIntegrator(const ConnectionNumeric& c, const TransportOptions& o)
        : conn(c), opt(o), r(c.rank), d(c.lambdas.size()), nforms((c.lambdas.size() - 1) * c.rank) {}

    // form value vector for index m at point t
    void form(size_t m, Complex t, std::vector<Complex>& v) const {
        size_t xp = m / r, k = m % r;
        std::fill(v.begin(), v.end(), Complex(0.0, 0.0));
        v[k] = 1.0 / (t - conn.lambdas[xp]) - 1.0 / (t - conn.lambdas[d - 1]);
    }

    // advance state along t(s), s from s0 to s1, with dt/ds supplied
    void run(State& state, const std::function<Complex(double)>& tof,
             const std::function<Complex(double)>& dtds, double s0, double s1) {
        std::vector<Complex> v(r);
        auto f = [&](double s, const State& ys, State& out) {
            Complex t = tof(s), dt = dtds(s);
            CMatrix a = conn.A(t);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) {
                    Complex acc(0.0, 0.0);
                    for (size_t k = 0; k < r; ++k) acc += ys[i * r + k] * a(k, j);
                    out[i * r + j] = dt * acc;  // W' = W A
                }
            for (size_t m = 0; m < nforms; ++m) {
                form(m, t, v);
                for (size_t j = 0; j < r; ++j) {
                    Complex acc(0.0, 0.0);
                    for (size_t k = 0; k < r; ++k) acc += ys[j * r + k] * v[k];
                    out[r * r + m * r + j] = dt * acc;
                }
            }
        };
        auto res = dp45(f, state, s0, s1, opt.rtol, opt.atol);
        state = std::move(res.y);
        steps += res.steps;
    }

    void run_segment(State& state, Complex z0, Complex z1) {
        if (z0 == z1) return;
        run(
            state, [=](double s) { return z0 + s * (z1 - z0); },
            [=](double s) {
                (void)s;
                return z1 - z0;
            },
            0.0, 1.0);
    }

    // improper piece between anchor and singular point lam with exponent
    // substitution t = lam + (anchor-lam) tau^{1/sigma}; integrates from
    // tau = 1 down to the cutoff (i.e. from the anchor toward lam).
    void run_into_singularity(State& state, Complex anchor, Complex lam, double sigma) {
        double k = 1.0 / sigma;
        Complex dzc = anchor - lam;
        run(
            state, [=](double tau) { return lam + dzc * std::pow(tau, k); },
            [=](double tau) { return dzc * k * std::pow(tau, k - 1.0); }, 1.0,
            opt.improper_cutoff);
    }
};

double min_real_eigenvalue(const QMatrix& m) {
    double s = std::numeric_limits<double>::infinity();
    for (const auto& root : complex_roots(char_poly(m))) s = std::min(s, root.value.real());
    return s;
}

}  // namespace

PeriodPairing period_pairing(const LogConnection& conn, const PathPlan& plan,
                             const TransportOptions& opt, const CMatrix* base_frame) {
    conn.validate();
    if (!theorem_T_admissible(conn))
        throw std::domain_error("period_pairing: connection is not Theorem-T admissible");
    ConnectionNumeric num(conn);
    size_t r = conn.rank, d = conn.points.size();
    size_t n = (d - 1) * r;
    DualChainIntegrator integ(num, opt);

    std::vector<double> sigma(d);
    for (size_t i = 0; i < d; ++i) sigma[i] = min_real_eigenvalue(conn.residues[i]);

    // W at each anchor with the base -> anchor pairing integrals
    CMatrix W0 = base_frame ? base_frame->inverse() : CMatrix::identity(r);
    std::vector<State> at_anchor(d);
    for (size_t i = 0; i < d; ++i) {
        State st(r * r + integ.nforms * r, Complex(0.0, 0.0));
        std::copy(W0.data(), W0.data() + W0.size(), st.begin());
        for (size_t seg = 0; seg + 1 < plan.paths[i].size(); ++seg)
            integ.run_segment(st, plan.paths[i][seg], plan.paths[i][seg + 1]);
        at_anchor[i] = std::move(st);
    }
    // continue into the singular points
    std::vector<State> into_sing(d);
    for (size_t i = 0; i < d; ++i) {
        State st = at_anchor[i];
        // zero the accumulators: the improper piece is accounted separately
        std::fill(st.begin() + static_cast<long>(r * r), st.end(), Complex(0.0, 0.0));
        integ.run_into_singularity(st, plan.anchors[i], num.lambdas[i], sigma[i]);
        into_sing[i] = std::move(st);
    }

    auto integrals = [&](const State& st, size_t m, size_t j) {
        return st[r * r + m * r + j];
    };

    PeriodPairing out;
    out.H = CMatrix(n, n);
    for (size_t x = 0; x + 1 < d; ++x) {
        for (size_t j = 0; j < r; ++j) {
            for (size_t m = 0; m < n; ++m) {
                // chain lambda_x -> anchor_x -> base -> anchor_last -> lambda_last
                Complex total = -integrals(into_sing[x], m, j)   // lambda_x -> anchor_x
                                - integrals(at_anchor[x], m, j)  // anchor_x -> base
                                + integrals(at_anchor[d - 1], m, j)
                                + integrals(into_sing[d - 1], m, j);
                out.H(x * r + j, m) = total;
            }
        }
    }
    out.det_Hc = out.H.det();
    out.ode_steps = integ.steps;
    return out;
}

Complex regularized_symbol(const LogConnection& conn, const PathPlan& plan, size_t i,
                           double quad_tol) {
    ConnectionNumeric num(conn);
    Complex lam = num.lambdas[i];
    Complex trB(0.0, 0.0);
    for (size_t k = 0; k < conn.rank; ++k) trB += num.B[i](k, k);
    auto f = [&](Complex t) { return num.trace_A(t) - trB / (t - lam); };
    Complex S(0.0, 0.0);
    for (size_t seg = 0; seg + 1 < plan.paths[i].size(); ++seg)
        S += integrate_segment(f, plan.paths[i][seg], plan.paths[i][seg + 1], quad_tol).value;
    S += integrate_segment(f, plan.anchors[i], lam, quad_tol).value;
    return std::exp(S - trB * std::log(plan.base - lam));
}

Complex regularized_symbol_infinity(const LogConnection& conn, const PathPlan& plan,
                                    double quad_tol) {
    ConnectionNumeric num(conn);
    CMatrix binf = num.B_infinity();
    Complex trB(0.0, 0.0);
    for (size_t k = 0; k < conn.rank; ++k) trB += binf(k, k);
    auto f = [&](Complex t) { return num.trace_A(t) + trB / t; };
    Complex S = integrate_segment(f, plan.base, plan.inf_anchor, quad_tol).value;
    // tail via u = 1/t: t = c/u, dt = -c/u^2 du, u from 1 to 0
    Complex c = plan.inf_anchor;
    auto tail = [&](double u) { return f(c / u) * (-c / (u * u)); };
    S += integrate_gk(tail, 1.0, 0.0, quad_tol).value;
    return std::exp(S + trB * std::log(plan.base));
}

Complex regularized_symbol_by_transport(const LogConnection& conn, const PathPlan& plan, size_t i,
                                        const TransportOptions& opt) {
    ConnectionNumeric num(conn);
    Complex lam = num.lambdas[i];
    Complex trB(0.0, 0.0);
    for (size_t k = 0; k < conn.rank; ++k) trB += num.B[i](k, k);
    CMatrix F = transport(num, plan.paths[i], CMatrix::identity(conn.rank), opt);
    // ledger branch of log(t - lam) at the anchor
    Complex log_at_anchor = PathPlan::continue_log(plan.paths[i], lam);
    auto value_at = [&](double frac) {
        // walk from the anchor toward lam to t = lam + frac*(anchor - lam)
        Complex target = lam + frac * (plan.anchors[i] - lam);
        Polyline seg{plan.anchors[i], target};
        CMatrix Ft = transport(num, seg, F, opt);
        Complex logt = log_at_anchor + std::log((target - lam) / (plan.anchors[i] - lam));
        Complex D = 1.0 / Ft.det();
        return D * std::exp(-trB * logt);
    };
    // Richardson: v(h) = L + c h + O(h^2)
    Complex v1 = value_at(1e-4), v2 = value_at(5e-5);
    return 2.0 * v2 - v1;
}

PeriodReport verify_theorem_T(const LogConnection& conn, const PathPlan& plan,
                              const TransportOptions& opt) {
    PeriodReport rep;
    rep.branch_convention_ok = plan.branch_convention_holds();
    PeriodPairing pp = period_pairing(conn, plan, opt);
    rep.det_Hc = pp.det_Hc;
    rep.ode_steps = pp.ode_steps;

    // gamma side: prod Gamma(res_x) * Gamma(1 - res_inf)^{-1} * det(-res_inf)
    Complex gamma(1.0, 0.0);
    for (const auto& m : conn.residues) {
        GammaValue g = gamma_of_matrix(m);
        if (g.condition != GammaCondition::ok)
            throw std::domain_error("verify_theorem_T: gamma pole at a finite residue");
        gamma *= g.value;
    }
    QMatrix binf = conn.residue_infinity();
    GammaValue g1 = gamma_of_matrix(QMatrix::identity(conn.rank) - binf);
    if (g1.condition != GammaCondition::ok)
        throw std::domain_error("verify_theorem_T: gamma pole at 1 - res_inf");
    gamma /= g1.value;
    gamma *= Complex(to_double((-binf).det()), 0.0);
    rep.gamma_side = gamma;

    Complex sym(1.0, 0.0);
    for (size_t i = 0; i < conn.points.size(); ++i) sym *= regularized_symbol(conn, plan, i);
    sym /= regularized_symbol_infinity(conn, plan);
    rep.symbol_side = sym;

    rep.residual = std::abs(rep.det_Hc / (rep.gamma_side * rep.symbol_side) - 1.0);
    return rep;
}

PeriodReport verify_theorem_T(const LogConnection& conn, double tol) {
    PathPlan plan = default_plan(conn);
    TransportOptions opt;
    opt.rtol = std::min(1e-12, tol * 1e-2);
    return verify_theorem_T(conn, plan, opt);
}

std::vector<Complex> eigenvalues(const CMatrix& m) {
    // characteristic polynomial by complex Faddeev-LeVerrier, then Aberth
    // (via the double-coefficient path of the exact root finder is not
    // available here, so run a small local Aberth).
    size_t n = m.rows();
    std::vector<Complex> c(n + 1);
    c[n] = Complex(1.0, 0.0);
    CMatrix Mk(n, n);
    for (size_t k = 1; k <= n; ++k) {
        CMatrix t = m * Mk;
        for (size_t i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
        Mk = t;
        CMatrix prod = m * Mk;
        Complex tr(0.0, 0.0);
        for (size_t i = 0; i < n; ++i) tr += prod(i, i);
        c[n - k] = -tr / Complex(static_cast<double>(k), 0.0);
    }
    // Aberth
    std::vector<Complex> z(n);
    double radius = 1.0;
    for (size_t i = 0; i < n; ++i)
        radius = std::max(radius, 1.0 + std::pow(std::abs(c[i]), 1.0 / (n - i)));
    for (size_t i = 0; i < n; ++i) z[i] = std::polar(radius, 2.0 * M_PI * i / n + 0.4);
    auto eval = [&](Complex x, Complex& d) {
        Complex p(0.0, 0.0);
        d = Complex(0.0, 0.0);
        for (size_t i = n + 1; i-- > 0;) {
            d = d * x + p;
            p = p * x + c[i];
        }
        return p;
    };
    for (int it = 0; it < 300; ++it) {
        double moved = 0.0;
        for (size_t i = 0; i < n; ++i) {
            Complex d;
            Complex p = eval(z[i], d);
            Complex newton = (d == Complex(0.0, 0.0)) ? Complex(0.0, 0.0) : p / d;
            Complex sum(0.0, 0.0);
            for (size_t j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            Complex corr = newton / (1.0 - newton * sum);
            z[i] -= corr;
            moved = std::max(moved, std::abs(corr));
        }
        if (moved < 1e-15 * radius) break;
    }
    std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

}  // namespace perdet
