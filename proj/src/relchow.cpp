#include "perdet/relchow.hpp"

#include "perdet/gamma.hpp"
#include "perdet/roots.hpp"

#include <algorithm>
#include <cmath>

namespace perdet {

bool ClosedPoint::operator<(const ClosedPoint& o) const {
    auto rankof = [](const ClosedPoint& p) {
        return p.kind == Kind::finite ? 0 : (p.kind == Kind::orbit ? 1 : 2);
    };
    if (rankof(*this) != rankof(o)) return rankof(*this) < rankof(o);
    if (kind == Kind::finite) return value < o.value;
    if (kind == Kind::orbit) {
        if (min_poly.degree() != o.min_poly.degree())
            return min_poly.degree() < o.min_poly.degree();
        return min_poly.coeffs() < o.min_poly.coeffs();
    }
    return false;
}

std::string ClosedPoint::str() const {
    if (kind == Kind::infinity) return "inf";
    if (kind == Kind::finite) return to_string(value);
    return "(" + min_poly.str("t") + ")";
}

Divisor Divisor::of(std::vector<Rational> pts, bool inf) {
    Divisor d;
    d.finite = std::move(pts);
    std::sort(d.finite.begin(), d.finite.end());
    d.with_infinity = inf;
    return d;
}

bool Divisor::contains(const ClosedPoint& x) const {
    if (x.kind == ClosedPoint::Kind::infinity) return with_infinity;
    if (x.kind == ClosedPoint::Kind::orbit) return false;
    return std::binary_search(finite.begin(), finite.end(), x.value);
}

bool RelChowClass::is_zero() const {
    if (degree != 0) return false;
    for (const auto& u : units)
        if (u != 1) return false;
    return true;
}

namespace {

// ord of f at an orbit point (multiplicity of the monic squarefree factor q)
long orbit_ord(const Poly& p, const Poly& q) {
    if (p.is_zero()) return 0;
    long ord = 0;
    Poly r = p;
    while (true) {
        auto [quo, rem] = r.divmod(q);
        if (!rem.is_zero()) break;
        r = quo;
        ++ord;
    }
    return ord;
}

// Norm of the unit part of f at an orbit point q (monic): N((f/q^ord)(point)).
Rational orbit_unit_norm(const RatFunc& f, const Poly& q) {
    long on = orbit_ord(f.num(), q), od = orbit_ord(f.den(), q);
    Poly n = f.num(), d = f.den();
    for (long i = 0; i < on; ++i) n = n / q;
    for (long i = 0; i < od; ++i) d = d / q;
    Rational rn = resultant(q, n);
    Rational rd = resultant(q, d);
    return rn / rd;
}

long orbit_ord_rf(const RatFunc& f, const Poly& q) {
    return orbit_ord(f.num(), q) - orbit_ord(f.den(), q);
}

// gcd-free basis of a set of monic squarefree polynomials
std::vector<Poly> gcd_free_basis(std::vector<Poly> in) {
    std::vector<Poly> basis;
    for (auto p : in) {
        if (p.degree() <= 0) continue;
        std::vector<Poly> queue{p};
        while (!queue.empty()) {
            Poly q = queue.back();
            queue.pop_back();
            if (q.degree() <= 0) continue;
            bool split = false;
            for (auto& b : basis) {
                Poly g = gcd(q, b);
                if (g.degree() > 0) {
                    if (g.degree() < b.degree()) {
                        // split existing basis element
                        Poly rest = b / g;
                        b = g;
                        basis.push_back(rest);
                    }
                    Poly q2 = q / g;
                    if (q2.degree() > 0) queue.push_back(q2);
                    split = true;
                    break;
                }
            }
            if (!split) basis.push_back(q.monic());
        }
    }
    std::sort(basis.begin(), basis.end(),
              [](const Poly& a, const Poly& b) { return a.coeffs() < b.coeffs(); });
    return basis;
}

// rational points and orbit factors of the zero set of p
void split_support(const Poly& p, std::vector<Rational>& pts, std::vector<Poly>& orbits) {
    if (p.is_zero() || p.degree() == 0) return;
    Poly rest = p.monic();
    for (const auto& [r, m] : rational_roots(p)) {
        pts.push_back(r);
        for (int i = 0; i < m; ++i) rest = rest / Poly::linear_root(r);
    }
    if (rest.degree() > 0)
        for (const auto& f : squarefree_decomposition(rest)) orbits.push_back(f);
}

}  // namespace

Rational tame_symbol(const RatFunc& g, const RatFunc& f, const ClosedPoint& x) {
    if (g.is_zero() || f.is_zero()) throw std::domain_error("tame symbol of zero");
    if (x.kind != ClosedPoint::Kind::orbit) {
        P1Point p = x.kind == ClosedPoint::Kind::infinity ? P1Point::infinity()
                                                          : P1Point::finite(x.value);
        auto [og, lg] = ord_and_lead(g, p);
        auto [of, lf] = ord_and_lead(f, p);
        Rational sign = ((og * of) % 2 == 0) ? Rational(1) : Rational(-1);
        // value of (-1)^{og of} g^{of} f^{-og}: Laurent leads, powers cancel
        Rational v = sign;
        auto powr = [](const Rational& b, long e) {
            Rational r(1);
            Rational bb = e >= 0 ? b : Rational(1) / b;
            long n = std::abs(e);
            for (long i = 0; i < n; ++i) r *= bb;
            return r;
        };
        return v * powr(lg, of) * powr(lf, -og);
    }
    // orbit point: norms via resultants; sign exponent picks up the degree
    long og = orbit_ord_rf(g, x.min_poly);
    long of = orbit_ord_rf(f, x.min_poly);
    long e = x.min_poly.degree();
    Rational sign = ((og * of * e) % 2 == 0) ? Rational(1) : Rational(-1);
    Rational Ng = orbit_unit_norm(g, x.min_poly);
    Rational Nf = orbit_unit_norm(f, x.min_poly);
    auto powr = [](const Rational& b, long e2) {
        Rational r(1);
        Rational bb = e2 >= 0 ? b : Rational(1) / b;
        long n = std::abs(e2);
        for (long i = 0; i < n; ++i) r *= bb;
        return r;
    };
    return sign * powr(Ng, of) * powr(Nf, -og);
}

std::vector<ClosedPoint> joint_support(const RatFunc& g, const RatFunc& f) {
    std::vector<Rational> pts;
    std::vector<Poly> orbit_raw;
    split_support(g.num(), pts, orbit_raw);
    split_support(g.den(), pts, orbit_raw);
    split_support(f.num(), pts, orbit_raw);
    split_support(f.den(), pts, orbit_raw);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<ClosedPoint> out;
    for (auto& p : pts) out.push_back(ClosedPoint::finite(p));
    for (auto& q : gcd_free_basis(std::move(orbit_raw))) out.push_back(ClosedPoint::orbit(q));
    out.push_back(ClosedPoint::infinity());
    return out;
}

Rational weil_reciprocity_product(const RatFunc& g, const RatFunc& f) {
    Rational prod(1);
    for (const auto& x : joint_support(g, f)) prod *= tame_symbol(g, f, x);
    return prod;
}

bool weil_reciprocity_check(const RatFunc& g, const RatFunc& f) {
    return weil_reciprocity_product(g, f) == 1;
}

std::vector<AdeleElement> boundary(const RatFunc& f, const Divisor& D) {
    if (f.is_zero()) throw std::domain_error("boundary of zero");
    std::vector<AdeleElement> out;
    // D-points always carry their pair (ord, leading unit)
    for (const auto& x : D.finite) {
        auto [o, l] = ord_and_lead(f, P1Point::finite(x));
        out.push_back({ClosedPoint::finite(x), o, l});
    }
    if (D.with_infinity) {
        auto [o, l] = ord_and_lead(f, P1Point::infinity());
        out.push_back({ClosedPoint::infinity(), o, l});
    }
    // off-D support: order only
    std::vector<Rational> pts;
    std::vector<Poly> orbits;
    split_support(f.num(), pts, orbits);
    split_support(f.den(), pts, orbits);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const auto& p : pts) {
        if (D.contains(ClosedPoint::finite(p))) continue;
        auto [o, l] = ord_and_lead(f, P1Point::finite(p));
        (void)l;
        if (o != 0) out.push_back({ClosedPoint::finite(p), o, Rational(1)});
    }
    for (const auto& q : gcd_free_basis(std::move(orbits))) {
        long o = orbit_ord_rf(f, q);
        if (o != 0) out.push_back({ClosedPoint::orbit(q), o, Rational(1)});
    }
    if (!D.with_infinity) {
        auto [o, l] = ord_and_lead(f, P1Point::infinity());
        (void)l;
        if (o != 0) out.push_back({ClosedPoint::infinity(), o, Rational(1)});
    }
    return out;
}

RelChowClass chow_normal_form(std::vector<AdeleElement> cycle, const Divisor& D) {
    if (D.size() == 0) throw std::invalid_argument("chow_normal_form: empty divisor");
    // accumulate: D-slots (ord, unit); off-D rational/orbit/infinity orders
    std::map<Rational, std::pair<long, Rational>> dslots;
    std::pair<long, Rational> infslot{0, Rational(1)};
    std::map<Rational, long> off_finite;
    std::map<std::vector<Rational>, std::pair<Poly, long>> off_orbit;
    long off_inf = 0;
    for (const auto& x : D.finite) dslots[x] = {0, Rational(1)};
    for (const auto& a : cycle) {
        switch (a.point.kind) {
            case ClosedPoint::Kind::finite:
                if (D.contains(a.point)) {
                    auto& s = dslots[a.point.value];
                    s.first += a.ord;
                    s.second *= a.unit;
                } else {
                    off_finite[a.point.value] += a.ord;
                }
                break;
            case ClosedPoint::Kind::infinity:
                if (D.with_infinity) {
                    infslot.first += a.ord;
                    infslot.second *= a.unit;
                } else {
                    off_inf += a.ord;
                }
                break;
            case ClosedPoint::Kind::orbit: {
                auto& s = off_orbit[a.point.min_poly.coeffs()];
                s.first = a.point.min_poly;
                s.second += a.ord;
                break;
            }
        }
    }

    // subtract n * boundary(f) for f invertible-at-nothing-in-particular:
    // dslot units divide by lead(f)^n etc.
    auto apply_boundary = [&](const RatFunc& f, long n) {
        if (n == 0) return;
        for (auto& [x, s] : dslots) {
            auto [o, l] = ord_and_lead(f, P1Point::finite(x));
            s.first -= n * o;
            Rational p(1);
            for (long i = 0; i < std::abs(n); ++i) p *= l;
            if (n > 0) s.second /= p;
            else s.second *= p;
        }
        auto [oi, li] = ord_and_lead(f, P1Point::infinity());
        if (D.with_infinity) {
            infslot.first -= n * oi;
            Rational p(1);
            for (long i = 0; i < std::abs(n); ++i) p *= li;
            if (n > 0) infslot.second /= p;
            else infslot.second *= p;
        } else {
            off_inf -= n * oi;
        }
    };

    // 1) clear finite off-D rational points with monic linear generators
    for (auto& [x, n] : off_finite) {
        if (n == 0) continue;
        apply_boundary(RatFunc(Poly::linear_root(x)), n);
        n = 0;
    }
    // 2) clear orbit points with their monic polynomials
    for (auto& [key, s] : off_orbit) {
        (void)key;
        if (s.second == 0) continue;
        apply_boundary(RatFunc(s.first), s.second);
        s.second = 0;
    }
    // 3) move any leftover off-D infinity multiplicity into the first D-slot
    if (!D.with_infinity && off_inf != 0) {
        // f = 1/(t - x0): div f = [inf] - [x0]
        RatFunc f = RatFunc(Poly::constant(Rational(1)), Poly::linear_root(D.finite.front()));
        apply_boundary(f, off_inf);
        off_inf = 0;
    }

    // 4) zero the Z-slots at all D-points except the last
    // last slot: infinity when declared, else largest finite point
    std::vector<Rational> keys;
    for (const auto& [x, s] : dslots) keys.push_back(x);
    // pivoting with f = (t - x) when infinity in D, else (t-x)/(t-x_last)
    for (size_t i = 0; i < keys.size(); ++i) {
        bool last_finite = !D.with_infinity && i + 1 == keys.size();
        if (last_finite) break;
        long n = dslots[keys[i]].first;
        if (n == 0) continue;
        RatFunc f = D.with_infinity
                        ? RatFunc(Poly::linear_root(keys[i]))
                        : RatFunc(Poly::linear_root(keys[i]), Poly::linear_root(keys.back()));
        apply_boundary(f, n);
    }

    // 5) read the degree off the remaining slot and scale the first unit to 1
    RelChowClass out;
    out.D = D;
    long deg = D.with_infinity ? infslot.first : dslots[keys.back()].first;
    out.degree = deg;
    std::vector<Rational> units;
    for (const auto& x : keys) units.push_back(dslots[x].second);
    if (D.with_infinity) units.push_back(infslot.second);
    Rational scale = units.front();
    for (auto& u : units) u /= scale;
    out.units = std::move(units);
    return out;
}

std::vector<AdeleElement> relative_canonical_cycle(const Divisor& D) {
    if (!D.with_infinity)
        throw std::invalid_argument("canonical cycle formula expects infinity in D'");
    std::vector<AdeleElement> c;
    // -( sum_x (t - x)[x] + (-t)[inf] ): (t-x)[x] = (ord 1, unit 1);
    // (-t)[inf] = (ord -1, unit -1) w.r.t. 1/t.
    for (const auto& x : D.finite) c.push_back({ClosedPoint::finite(x), -1, Rational(1)});
    c.push_back({ClosedPoint::infinity(), 1, Rational(-1)});
    return c;
}

RelChowClass relative_canonical_class(const Divisor& D) {
    return chow_normal_form(relative_canonical_cycle(D), D);
}

Complex analytic_symbol_pair(const LogConnection& conn, const PathPlan& plan, size_t i, long ord,
                             const Rational& unit) {
    if (conn.rank != 1) throw std::invalid_argument("analytic symbol: rank-1 connections only");
    if (unit == 0) throw std::invalid_argument("analytic symbol: unit must be nonzero");
    double a = to_double(conn.residues[i](0, 0));
    Complex u(to_double(unit), 0.0);
    Complex value = std::exp(Complex(0.0, -M_PI * a * ord) + a * std::log(u));
    Complex ps = regularized_symbol(conn, plan, i);
    return value * std::pow(ps, Complex(-static_cast<double>(ord), 0.0));
}

FermatChowClass fermat_configuration_chern(long n, const std::vector<Rational>& coords) {
    if (n < 1) throw std::invalid_argument("fermat chern: n >= 1");
    if (coords.size() != static_cast<size_t>(n) + 2)
        throw std::invalid_argument("fermat chern: need n+2 coordinates");
    Rational sum(0);
    for (const auto& t : coords) {
        if (t == 0) throw std::invalid_argument("fermat chern: coordinates must be nonzero");
        sum += t;
    }
    if (sum != 0) throw std::invalid_argument("fermat chern: coordinates must sum to zero");
    FermatChowClass out;
    out.n = n;
    out.degree = 1;
    out.units = coords;
    Rational scale = out.units.front();
    for (auto& u : out.units) u /= scale;
    return out;
}

FermatChowClass fermat_relative_canonical(long n, const std::vector<Rational>& coords) {
    FermatChowClass c = fermat_configuration_chern(n, coords);
    c.canonical_sign = true;
    if (n % 2 == 1) {
        // (-1)^n inverts the class: degree flips, units invert
        c.degree = -c.degree;
        for (auto& u : c.units) u = Rational(1) / u;
        Rational scale = c.units.front();
        for (auto& u : c.units) u /= scale;
    }
    return c;
}

bool fermat_pairing_is_trivial(const std::vector<Rational>& exponents,
                               const FermatChowClass& cls) {
    if (exponents.size() != cls.units.size())
        throw std::invalid_argument("fermat pairing: exponent count mismatch");
    // the unit tuple contributes prod t_i^{a_i} modulo F^x; the contribution
    // is an F^x element exactly when sum a_i lies in Z (kills the common
    // scalar ambiguity), and the degree part pairs [x] with the fiber, an
    // F-rational value. The pairing class is then trivial.
    Rational s(0);
    for (const auto& a : exponents) s += a;
    return is_integer(s);
}

RatioHeuristic theorem2_ratio_heuristic(const LogConnection& conn, const PathPlan& plan,
                                        double tol) {
    if (conn.rank != 1) throw std::invalid_argument("theorem2 heuristic: rank-1 only");
    RatioHeuristic out;
    TransportOptions topt;
    PeriodPairing pM = period_pairing(conn, plan, topt);

    // unit object via the canonical small extension: all exponents 1
    std::vector<Rational> ones(conn.points.size(), Rational(1));
    LogConnection unit_conn = LogConnection::rank1(conn.points, ones, "unit");
    PathPlan unit_plan = default_plan(unit_conn);
    PeriodPairing p1 = period_pairing(unit_conn, unit_plan, topt);

    auto gamma_full = [](const LogConnection& c) {
        LogConnection cc = c;
        cc.include_infinity = true;
        GammaValue g = gamma_of_connection(cc);
        if (g.condition != GammaCondition::ok)
            throw std::domain_error("theorem2 heuristic: gamma pole");
        return g.value;
    };

    // pairing value ([det M], c_{X mod D'}) =
    //   [ prod_x (M, t-lambda_x)_x * (M, -1/t)_inf^{-1} ]^{-1}
    // with (M, t-lambda_x)_x = e^{-i pi a_x} (P, x-lambda_x)^{-1},
    //      (M, -1/t)_inf = (P, 1/x)^{-1}.
    Complex pairing(1.0, 0.0);
    for (size_t i = 0; i < conn.points.size(); ++i) {
        double a = to_double(conn.residues[i](0, 0));
        Complex sym = std::exp(Complex(0.0, -M_PI * a)) / regularized_symbol(conn, plan, i);
        pairing *= sym;
    }
    pairing /= 1.0 / regularized_symbol_infinity(conn, plan);
    pairing = 1.0 / pairing;

    out.ratio = (pM.det_Hc * gamma_full(conn)) / (p1.det_Hc * gamma_full(unit_conn)) / pairing;
    if (std::abs(out.ratio.imag()) < tol * (1.0 + std::abs(out.ratio.real()))) {
        auto guess = recognize_rational(out.ratio.real(), 10000L, tol);
        if (guess) out.rational_guess = guess;
    }
    return out;
}

}  // namespace perdet
