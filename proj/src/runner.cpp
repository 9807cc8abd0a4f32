#include "perdet/runner.hpp"

#include "perdet/jacobi.hpp"
#include "perdet/periods.hpp"
#include "perdet/relchow.hpp"
#include "perdet/rng.hpp"

#include <chrono>
#include <cmath>
#include <thread>

namespace perdet {

namespace {

using nlohmann::ordered_json;

// match two eigenvalue lists greedily; returns the max pairing distance
double eigen_match_error(std::vector<Complex> a, std::vector<Complex> b) {
    double worst = 0.0;
    for (const auto& x : a) {
        double best = std::numeric_limits<double>::infinity();
        size_t bi = 0;
        for (size_t i = 0; i < b.size(); ++i) {
            double d = std::abs(x - b[i]);
            if (d < best) {
                best = d;
                bi = i;
            }
        }
        if (b.empty()) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, best);
        b.erase(b.begin() + static_cast<long>(bi));
    }
    return worst;
}

std::vector<Complex> residue_exponentials(const QMatrix& m) {
    std::vector<Complex> out;
    for (const auto& r : complex_roots(char_poly(m)))
        for (int i = 0; i < r.multiplicity; ++i)
            out.push_back(std::exp(Complex(0.0, -2.0 * M_PI) * r.value));
    return out;
}

// random rational function splitting over Q with roots away from Z_{<=0}
RatFunc random_split_rf(Rng& rng, int max_factors = 3) {
    Poly num = Poly::constant(rng.rational());
    Poly den = Poly::constant(Rational(1));
    int nf = static_cast<int>(rng.below(static_cast<uint64_t>(max_factors))) + 1;
    for (int i = 0; i < nf; ++i) {
        Rational root(rng.range(1, 40), rng.range(2, 9));
        if (rng.below(4) == 0) root = -root + Rational(1, 2);  // keep off Z_{<=0}
        if (rng.below(2) == 0) num = num * Poly::linear_root(root);
        else den = den * Poly::linear_root(root);
    }
    return RatFunc(num, den);
}

double check_gamma_dpartial(Rng& rng, long count) {
    double worst = 0.0;
    for (long i = 0; i < count; ++i) {
        RatFunc f = random_split_rf(rng);
        GammaValue g = gamma_of_rf(partial_shift(f));
        if (g.condition != GammaCondition::ok) continue;
        Complex lhs = g.value * Complex(to_double(delta(f)), 0.0);
        worst = std::max(worst, std::abs(lhs - 1.0));
    }
    return worst;
}

double check_gauss_multiplication(Rng& rng, long count) {
    // Gamma(s)/Gamma(1) = prod_l Gamma((s+l)/m)/Gamma((1+l)/m) * m^{s-1}
    double worst = 0.0;
    for (long m : {2L, 3L, 5L}) {
        for (long i = 0; i < count; ++i) {
            Complex s(0.25 + 5.0 * rng.uniform(), -3.0 + 6.0 * rng.uniform());
            Complex prod(1.0, 0.0);
            for (long l = 0; l < m; ++l) {
                prod *= gamma_complex((s + Complex(static_cast<double>(l), 0.0)) /
                                      Complex(static_cast<double>(m), 0.0))
                            .value;
                prod /= gamma_complex(Complex((1.0 + static_cast<double>(l)) /
                                                  static_cast<double>(m),
                                              0.0))
                            .value;
            }
            prod *= std::pow(Complex(static_cast<double>(m), 0.0), s - 1.0);
            Complex lhs = gamma_complex(s).value;
            worst = std::max(worst, std::abs(prod / lhs - 1.0));
        }
    }
    return worst;
}

// random polynomial splitting over Q (monic times constant)
RatFunc random_split_pair_member(Rng& rng) {
    Poly p = Poly::constant(rng.rational());
    int deg = static_cast<int>(rng.below(4)) + 1;
    for (int i = 0; i < deg; ++i) p = p * Poly::linear_root(rng.rational(9, 5));
    return RatFunc(p);
}

CheckReport run_periods(const CheckConfig& cfg) {
    CheckReport rep;
    LogConnection conn = cfg.connection();
    PathPlanOptions popt;
    popt.base_override = cfg.base_point;
    popt.disc_scale = cfg.disc_scale;
    PathPlan plan = default_plan(conn, popt);
    if (cfg.mode == "heuristic" || cfg.mode == "heuristic-negative") {
        RatioHeuristic h = theorem2_ratio_heuristic(conn, plan);
        if (cfg.mode == "heuristic-negative") {
            // deliberately perturbed gamma factor: scale the ratio by 1.0001
            Complex perturbed = h.ratio * Complex(1.0001, 0.0);
            auto guess = recognize_rational(perturbed.real(), 10000L, 1e-9);
            bool recognized =
                std::abs(perturbed.imag()) < 1e-9 * (1.0 + std::abs(perturbed.real())) &&
                guess.has_value();
            rep.lhs = complex_json(perturbed);
            rep.rhs = nullptr;
            rep.pass = !recognized;
            rep.diagnostics["note"] = "negative control: recognition must fail";
            return rep;
        }
        rep.lhs = complex_json(h.ratio);
        rep.pass = h.rational_guess.has_value();
        rep.rhs = h.rational_guess ? ordered_json(to_string(*h.rational_guess)) : ordered_json();
        rep.diagnostics["heuristic"] = true;
        return rep;
    }
    TransportOptions topt;
    topt.rtol = std::min(1e-12, cfg.tol * 1e-3);
    PeriodReport pr = verify_theorem_T(conn, plan, topt);
    rep.lhs = complex_json(pr.det_Hc);
    rep.rhs = complex_json(pr.gamma_side * pr.symbol_side);
    rep.residual = pr.residual;
    rep.pass = pr.residual <= cfg.tol;
    rep.diagnostics["gamma_side"] = complex_json(pr.gamma_side);
    rep.diagnostics["symbol_side"] = complex_json(pr.symbol_side);
    rep.diagnostics["ode_steps"] = pr.ode_steps;
    rep.diagnostics["branch_convention_ok"] = pr.branch_convention_ok;
    return rep;
}

CheckReport run_monodromy_one(const LogConnection& conn, double tol, ordered_json& diag_list) {
    CheckReport rep;
    PathPlan plan = default_plan(conn);
    TransportOptions topt;
    topt.rtol = 1e-12;
    double worst = 0.0;
    for (size_t i = 0; i < conn.points.size(); ++i) {
        CMatrix M = monodromy(conn, i, plan, topt);
        double err = eigen_match_error(eigenvalues(M), residue_exponentials(conn.residues[i]));
        worst = std::max(worst, err);
    }
    // pi_1 relation: the product of standard loops in ascending point order
    // is inverse to the positive loop around infinity
    std::vector<size_t> order(conn.points.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return conn.points[a] < conn.points[b]; });
    CMatrix prod = CMatrix::identity(conn.rank);
    for (size_t i : order) prod = prod * monodromy(conn, i, plan, topt);
    CMatrix dev = prod * monodromy_infinity(conn, plan, topt);
    double rel_err = (dev - CMatrix::identity(conn.rank)).max_abs();
    worst = std::max(worst, rel_err);
    ordered_json d;
    d["label"] = conn.label;
    d["pi1_relation_error"] = rel_err;
    diag_list.push_back(d);
    rep.residual = worst;
    rep.pass = worst <= tol;
    return rep;
}

CheckReport run_monodromy(const CheckConfig& cfg) {
    CheckReport rep;
    ordered_json diag = ordered_json::array();
    double worst = 0.0;
    if (cfg.mode == "catalog") {
        for (const auto& conn : monodromy_catalog()) {
            CheckReport one = run_monodromy_one(conn, cfg.tol, diag);
            worst = std::max(worst, one.residual.value_or(0.0));
        }
    } else {
        CheckReport one = run_monodromy_one(cfg.connection(), cfg.tol, diag);
        worst = one.residual.value_or(0.0);
    }
    rep.lhs = "monodromy eigenvalues";
    rep.rhs = "exp(-2 pi i spec(res))";
    rep.residual = worst;
    rep.pass = worst <= cfg.tol;
    rep.diagnostics["connections"] = diag;
    return rep;
}

CheckReport run_gamma(const CheckConfig& cfg) {
    CheckReport rep;
    Rng rng(cfg.seed);
    double worst = 0.0;
    if (cfg.mode == "gauss-mult") {
        worst = check_gauss_multiplication(rng, std::max(1L, cfg.count / 2));
        rep.lhs = "Gamma(s)";
        rep.rhs = "prod_l Gamma((s+l)/m)/Gamma((1+l)/m) * m^(s-1)";
    } else if (cfg.mode == "dpartial") {
        worst = check_gamma_dpartial(rng, cfg.count);
        rep.lhs = "Gamma(df) * Delta(f)";
        rep.rhs = "1";
    } else {
        worst = std::max(check_gamma_dpartial(rng, cfg.count),
                         check_gauss_multiplication(rng, std::max(1L, cfg.count / 2)));
        rep.lhs = "gamma homomorphism suite";
        rep.rhs = "identities";
    }
    rep.residual = worst;
    rep.pass = worst <= cfg.tol;
    rep.diagnostics["seed"] = cfg.seed;
    return rep;
}

CheckReport run_symbol(const CheckConfig& cfg) {
    CheckReport rep;
    LogConnection conn = cfg.connection();
    PathPlan plan = default_plan(conn);
    double worst = 0.0;
    for (size_t i = 0; i < conn.points.size(); ++i) {
        // analytic symbol against (t - lambda_i): value e^{-i pi a}(P, .)^{-1},
        // cross-checked through the transport route
        Complex lhs = analytic_symbol_pair(conn, plan, i, 1, Rational(1));
        double a = to_double(conn.residues[i](0, 0));
        Complex rhs = std::exp(Complex(0.0, -M_PI * a)) /
                      regularized_symbol_by_transport(conn, plan, i);
        worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    }
    rep.lhs = "analytic symbol (Abel route)";
    rep.rhs = "regularized limit (transport route)";
    rep.residual = worst;
    rep.pass = worst <= cfg.tol;
    return rep;
}

CheckReport run_reciprocity(const CheckConfig& cfg) {
    CheckReport rep;
    Rng rng(cfg.seed);
    long ok = 0;
    for (long i = 0; i < cfg.count; ++i) {
        RatFunc g = random_split_pair_member(rng);
        RatFunc f = random_split_pair_member(rng);
        if (weil_reciprocity_check(g, f)) ++ok;
    }
    rep.lhs = ok;
    rep.rhs = cfg.count;
    rep.residual = static_cast<double>(cfg.count - ok);
    rep.pass = (ok == cfg.count);
    rep.diagnostics["seed"] = cfg.seed;
    return rep;
}

CheckReport run_chow(const CheckConfig& cfg) {
    CheckReport rep;
    Divisor D = Divisor::of(cfg.divisor_points, cfg.divisor_infinity);
    if (cfg.mode == "canonical") {
        RelChowClass c = relative_canonical_class(D);
        long expected = 2 - static_cast<long>(D.size());
        rep.lhs = c.degree;
        rep.rhs = expected;
        ordered_json units = ordered_json::array();
        for (const auto& u : c.units) units.push_back(to_string(u));
        rep.diagnostics["units"] = units;
        rep.pass = (c.degree == expected);
        rep.residual = std::abs(static_cast<double>(c.degree - expected));
        return rep;
    }
    Rng rng(cfg.seed);
    long ok = 0;
    for (long i = 0; i < cfg.count; ++i) {
        RatFunc f = random_split_pair_member(rng);
        if (chow_normal_form(boundary(f, D), D).is_zero()) ++ok;
    }
    rep.lhs = ok;
    rep.rhs = cfg.count;
    rep.residual = static_cast<double>(cfg.count - ok);
    rep.pass = (ok == cfg.count);
    rep.diagnostics["seed"] = cfg.seed;
    return rep;
}

CheckReport run_jacobi(const CheckConfig& cfg) {
    CheckReport rep;
    if (cfg.mode == "lemma55") {
        std::vector<long> ms = cfg.m > 0 ? std::vector<long>{cfg.m}
                                         : std::vector<long>{3, 4, 5, 6, 8};
        long qmax = cfg.q > 0 ? cfg.q : 200;
        long tested = 0, okc = 0;
        double worst = 0.0;
        for (long m : ms) {
            for (long q = 2; q <= qmax; ++q) {
                if (!GF::is_prime(q)) continue;
                long qm = q % m;
                if (qm != 1 % m && qm != (m - 1) % m) continue;
                if (m % q == 0) continue;
                for (long c = 1; c <= m / 2; ++c) {
                    if (std::gcd(c, m) != 1) continue;
                    BSupportElement a = BSupportElement::make(
                        q, {{Rational(c, m), 1}, {Rational(m - c, m), 1}});
                    JacobiResult jr = jacobi_J_k(a, q);
                    long expected = lemma55_expected(m, c, q);
                    ++tested;
                    double err = std::abs(jr.value - Complex(static_cast<double>(expected), 0.0));
                    worst = std::max(worst, err);
                    if (jr.integer_value && *jr.integer_value == expected && err < 1e-4) ++okc;
                }
            }
        }
        rep.lhs = okc;
        rep.rhs = tested;
        rep.residual = worst;
        rep.pass = (okc == tested) && worst < 1e-4;
        rep.diagnostics["cases"] = tested;
        return rep;
    }
    if (cfg.mode == "moduli") {
        // |g(a, psi)|^2 = q^f for all nontrivial characters, q^f <= bound
        long bound = cfg.q > 0 ? cfg.q : 10000;
        double worst = 0.0;
        long fields = 0, checked = 0;
        std::vector<std::pair<long, int>> field_list;
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
            long pf = p;
            for (int f = 1; pf <= bound; ++f, pf *= p) field_list.push_back({p, f});
        }
        for (long q = 17; q <= std::min(bound, 100L); ++q)
            if (GF::is_prime(q)) field_list.push_back({q, 1});
        for (auto [p, f] : field_list) {
            GF field(p, f);
            ++fields;
            long qf = field.order();
            // psi(trace) table once per field
            for (long j = 1; j < qf - 1; ++j) {
                Rational a(j, qf - 1);
                Complex g = gauss_sum_orbit(field, a);
                double err = std::abs(std::norm(g) - static_cast<double>(qf)) /
                             static_cast<double>(qf);
                worst = std::max(worst, err);
                ++checked;
            }
        }
        rep.lhs = "max | |g|^2 - q^f | / q^f";
        rep.rhs = 0;
        rep.residual = worst;
        rep.pass = worst <= cfg.tol;
        rep.diagnostics["fields"] = fields;
        rep.diagnostics["characters"] = checked;
        return rep;
    }
    // mode "value": J_k of the configured B-support element over F_q
    BSupportElement a = BSupportElement::make(cfg.q, cfg.bsupport);
    JacobiResult jr = jacobi_J_k(a, cfg.q);
    rep.lhs = complex_json(jr.value);
    rep.rhs = jr.integer_value ? ordered_json(*jr.integer_value) : ordered_json();
    rep.residual = jr.integer_value
                       ? std::abs(jr.value - Complex(static_cast<double>(*jr.integer_value), 0.0))
                       : std::abs(jr.value);
    rep.pass = jr.integer_value.has_value() && jr.psi0_independent;
    rep.diagnostics["psi0_independent"] = jr.psi0_independent;
    rep.diagnostics["psi0_check_skipped"] = jr.psi0_check_skipped;
    rep.diagnostics["bracket"] = to_string(fractional_bracket(a));
    return rep;
}

CheckReport run_fermat(const CheckConfig& cfg) {
    CheckReport rep;
    FermatCountResult r = fermat_point_count(cfg.m, cfg.q);
    rep.lhs = r.count;
    rep.rhs = r.formula_value;
    rep.residual = std::abs(static_cast<double>(r.count - r.formula_value));
    rep.pass = r.equal;
    return rep;
}

}  // namespace

CheckReport run_check(const CheckConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    try {
        switch (cfg.kind) {
            case CheckKind::periods: rep = run_periods(cfg); break;
            case CheckKind::monodromy: rep = run_monodromy(cfg); break;
            case CheckKind::gamma: rep = run_gamma(cfg); break;
            case CheckKind::symbol: rep = run_symbol(cfg); break;
            case CheckKind::reciprocity: rep = run_reciprocity(cfg); break;
            case CheckKind::chow: rep = run_chow(cfg); break;
            case CheckKind::jacobi: rep = run_jacobi(cfg); break;
            case CheckKind::fermat_count: rep = run_fermat(cfg); break;
        }
    } catch (const std::exception& e) {
        rep.pass = false;
        rep.diagnostics["error"] = e.what();
    }
    rep.check = cfg.id.empty() ? to_string(cfg.kind) : cfg.id;
    ordered_json inputs;
    inputs["kind"] = to_string(cfg.kind);
    if (!cfg.mode.empty()) inputs["mode"] = cfg.mode;
    if (!cfg.points.empty()) {
        ordered_json pts = ordered_json::array();
        for (const auto& p : cfg.points) pts.push_back(to_string(p));
        inputs["points"] = pts;
        ordered_json res = ordered_json::array();
        for (const auto& m : cfg.residues) {
            ordered_json mat = ordered_json::array();
            for (size_t i = 0; i < m.rows(); ++i) {
                ordered_json row = ordered_json::array();
                for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
                mat.push_back(row);
            }
            res.push_back(mat);
        }
        inputs["residues"] = res;
    }
    if (cfg.m > 0) inputs["m"] = cfg.m;
    if (cfg.q > 0) inputs["q"] = cfg.q;
    inputs["tol"] = cfg.tol;
    inputs["seed"] = cfg.seed;
    rep.inputs = inputs;
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<CheckReport> run_checks(const std::vector<CheckConfig>& configs,
                                    const RunOptions& options) {
    std::vector<CheckConfig> cfgs = configs;
    for (auto& c : cfgs) {
        if (options.tol_override) c.tol = *options.tol_override;
        if (options.seed_override) c.seed = *options.seed_override;
    }
    std::vector<CheckReport> reports(cfgs.size());
    unsigned jobs = options.jobs ? options.jobs : std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(cfgs.size() ? cfgs.size() : 1));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= cfgs.size()) break;
            reports[i] = run_check(cfgs[i]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return reports;
}

}  // namespace perdet
