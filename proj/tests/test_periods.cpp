#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perdet/periods.hpp"
#include "perdet/quadrature.hpp"
#include "perdet/rng.hpp"

#include <cmath>

using namespace perdet;

namespace {

// Independent quadrature oracle for B(a,b) = int_0^1 t^{a-1}(1-t)^{b-1} dt:
// endpoint substitutions t = u^{1/a} near 0 and 1-t = v^{1/b} near 1,
// splitting at 1/2. No transport machinery involved.
double beta_oracle(double a, double b) {
    auto left = integrate_gk(
        [&](double u) {
            double t = std::pow(u, 1.0 / a);
            return Complex(std::pow(1.0 - t, b - 1.0) / a, 0.0);
        },
        0.0, std::pow(0.5, a), 1e-14);
    auto right = integrate_gk(
        [&](double v) {
            double t = 1.0 - std::pow(v, 1.0 / b);
            return Complex(std::pow(t, a - 1.0) / b, 0.0);
        },
        0.0, std::pow(0.5, b), 1e-14);
    return left.value.real() + right.value.real();
}

LogConnection beta_conn(Rational a, Rational b) {
    return LogConnection::rank1({Rational(0), Rational(1)}, {a, b}, "beta");
}

QMatrix mat2(Rational a, Rational b, Rational c, Rational d) {
    QMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

LogConnection rank2_example() {
    LogConnection c;
    c.rank = 2;
    c.points = {Rational(0), Rational(1)};
    c.residues = {mat2(Rational(1, 2), Rational(1), Rational(0), Rational(1, 3)),
                  mat2(Rational(1, 4), Rational(0), Rational(0), Rational(1, 5))};
    c.label = "rank2";
    return c;
}

}  // namespace

TEST_CASE("beta oracle itself: B(1/2,1/2) = pi") {
    CHECK(std::abs(beta_oracle(0.5, 0.5) - M_PI) < 1e-12);
}

TEST_CASE("transport closed forms") {
    TransportOptions opt;
    // zero connection: Y unchanged
    auto z = LogConnection::rank1({Rational(0)}, {Rational(0)});
    CMatrix Y = transport(z, {Complex(1, 0), Complex(2, 0)}, CMatrix::identity(1), opt);
    CHECK(std::abs(Y(0, 0) - 1.0) < 1e-12);

    // a dlog t along |t| = 1 positively: multiplication by exp(-2 pi i a)
    auto c = LogConnection::rank1({Rational(0)}, {Rational(1, 3)});
    Polyline circle;
    for (int k = 0; k <= 96; ++k)
        circle.push_back(std::polar(1.0, 2.0 * M_PI * k / 96.0));
    CMatrix M = transport(c, circle, CMatrix::identity(1), opt);
    Complex expect = std::exp(Complex(0, -2.0 * M_PI / 3.0));
    CHECK(std::abs(M(0, 0) - expect) < 1e-10);

    // straight path 1 -> 2: t^{-a} solution gives 2^{-a}
    CMatrix S = transport(c, {Complex(1, 0), Complex(2, 0)}, CMatrix::identity(1), opt);
    CHECK(std::abs(S(0, 0) - std::pow(2.0, -1.0 / 3.0)) < 1e-11);
}

TEST_CASE("transport is path-homotopy invariant") {
    auto conn = LogConnection::rank1({Rational(0), Rational(1)},
                                     {Rational(1, 3), Rational(1, 5)});
    TransportOptions opt;
    Complex from(-2.0, -1.0), to(3.0, -0.5);
    CMatrix a = transport(conn, {from, to}, CMatrix::identity(1), opt);
    CMatrix b = transport(conn, {from, Complex(0.5, -2.5), Complex(2.0, -3.0), to},
                          CMatrix::identity(1), opt);
    CHECK(std::abs(a(0, 0) - b(0, 0)) < 1e-10);
}

TEST_CASE("monodromy eigenvalues match exp(-2 pi i spec(res))") {
    LogConnection c;
    c.rank = 2;
    c.points = {Rational(0), Rational(1)};
    QMatrix d(2, 2);
    d(0, 0) = Rational(1, 2);
    d(1, 1) = Rational(1, 3);
    c.residues = {d, QMatrix(2, 2)};
    PathPlan plan = default_plan(c);
    CMatrix M0 = monodromy(c, 0, plan);
    auto eig = eigenvalues(M0);
    REQUIRE(eig.size() == 2);
    // {-1, e^{-2 pi i/3}} sorted by real part
    CHECK(std::abs(eig[0] - Complex(-1, 0)) < 1e-9);
    CHECK(std::abs(eig[1] - std::exp(Complex(0, -2.0 * M_PI / 3.0))) < 1e-9);
    // loop around the nonsingular marked point: identity
    CMatrix M1 = monodromy(c, 1, plan);
    CHECK((M1 - CMatrix::identity(2)).max_abs() < 1e-10);
}

TEST_CASE("pi_1 relation: ordered loop product is inverse to the infinity loop") {
    auto conn = rank2_example();
    PathPlan plan = default_plan(conn);
    CMatrix prod = monodromy(conn, 0, plan) * monodromy(conn, 1, plan);
    CMatrix Minf = monodromy_infinity(conn, plan);  // positive loop around infinity
    CHECK((prod * Minf - CMatrix::identity(2)).max_abs() < 1e-9);
}

TEST_CASE("de_rham_basis dimensions and failure mode") {
    auto c3 = LogConnection::rank1({Rational(0), Rational(1), Rational(2)},
                                   {Rational(1, 3), Rational(1, 4), Rational(1, 5)});
    CHECK(de_rham_basis(c3).size() == 2);
    CHECK(de_rham_basis(beta_conn(Rational(1, 2), Rational(1, 2))).size() == 1);
    CHECK(de_rham_basis(rank2_example()).size() == 2);
    // res_inf singular: a + b = 0
    CHECK_THROWS(de_rham_basis(
        LogConnection::rank1({Rational(0), Rational(1)}, {Rational(1, 2), Rational(-1, 2)})));
}

TEST_CASE("betti frames are the transported identity") {
    auto conn = beta_conn(Rational(1, 3), Rational(1, 4));
    PathPlan plan = default_plan(conn);
    auto frames = betti_frames(conn, plan);
    REQUIRE(frames.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
        CMatrix direct = transport(conn, plan.paths[i], CMatrix::identity(1));
        CHECK(std::abs(frames[i](0, 0) - direct(0, 0)) < 1e-12);
    }
}

TEST_CASE("beta period against the quadrature oracle with the ledger phase") {
    // raw period = e^{-i pi b} B(a, b) / (b0^a (b0-1)^b), principal logs at b0
    for (auto [ar, br] : std::vector<std::pair<Rational, Rational>>{
             {Rational(1, 2), Rational(1, 2)}, {Rational(1, 3), Rational(1, 4)}}) {
        auto conn = beta_conn(ar, br);
        PathPlan plan = default_plan(conn);
        PeriodPairing pp = period_pairing(conn, plan);
        double a = to_double(ar), b = to_double(br);
        Complex b0 = plan.base;
        Complex predicted = std::exp(Complex(0, -M_PI * b)) * beta_oracle(a, b) /
                            std::exp(a * std::log(b0) + b * std::log(b0 - 1.0));
        CHECK(std::abs(pp.det_Hc - predicted) < 1e-8 * std::abs(predicted));
    }
}

TEST_CASE("regularized symbol: single singularity is a pure branch value") {
    // a dlog(t - lambda): integrand of Abel's identity vanishes identically,
    // so the symbol is exactly (b0 - lambda)^{-a}
    auto c = LogConnection::rank1({Rational(2)}, {Rational(1, 3)});
    PathPlan plan = default_plan(c);
    Complex sym = regularized_symbol(c, plan, 0);
    Complex expect = std::exp(Complex(-1.0 / 3.0, 0) * std::log(plan.base - 2.0));
    CHECK(std::abs(sym - expect) < 1e-12);
}

TEST_CASE("regularized symbol: Abel route agrees with the transport route") {
    auto conn = beta_conn(Rational(1, 2), Rational(1, 2));
    PathPlan plan = default_plan(conn);
    for (size_t i = 0; i < 2; ++i) {
        Complex abel = regularized_symbol(conn, plan, i);
        Complex direct = regularized_symbol_by_transport(conn, plan, i);
        CHECK(std::abs(abel - direct) < 1e-6 * (1.0 + std::abs(abel)));
    }
    auto r2 = rank2_example();
    PathPlan plan2 = default_plan(r2);
    Complex abel = regularized_symbol(r2, plan2, 0);
    Complex direct = regularized_symbol_by_transport(r2, plan2, 0);
    CHECK(std::abs(abel - direct) < 1e-6 * (1.0 + std::abs(abel)));
}

TEST_CASE("Abel identity: det of transport equals scalar quadrature route") {
    Rng rng(77);
    auto conn = rank2_example();
    ConnectionNumeric num(conn);
    TransportOptions opt;
    for (int it = 0; it < 20; ++it) {
        Complex from(-3.0 + rng.uniform(), -1.0 - rng.uniform());
        Complex to(1.5 + rng.uniform(), -0.5 - rng.uniform());
        Complex mid(0.5 * (from + to) - Complex(0, 1.0 + rng.uniform()));
        Polyline path{from, mid, to};
        CMatrix Y = transport(conn, path, CMatrix::identity(2), opt);
        Complex detY = Y.det();
        Complex integral(0, 0);
        for (size_t s = 0; s + 1 < path.size(); ++s)
            integral +=
                integrate_segment([&](Complex t) { return num.trace_A(t); }, path[s], path[s + 1])
                    .value;
        // Y' = -A Y: det Y = exp(-int Tr A)
        CHECK(std::abs(detY - std::exp(-integral)) < 1e-10 * (1.0 + std::abs(detY)));
    }
}

TEST_CASE("verify_theorem_T: beta cases to 1e-8") {
    auto r1 = verify_theorem_T(beta_conn(Rational(1, 2), Rational(1, 2)));
    CHECK(r1.residual < 1e-8);
    CHECK(r1.branch_convention_ok);
    auto r2 = verify_theorem_T(beta_conn(Rational(1, 3), Rational(1, 4)));
    CHECK(r2.residual < 1e-8);
}

TEST_CASE("verify_theorem_T: d=3 rank 1 and rank 2") {
    auto c3 = LogConnection::rank1({Rational(0), Rational(1), Rational(2)},
                                   {Rational(1, 3), Rational(1, 4), Rational(1, 5)});
    CHECK(verify_theorem_T(c3).residual < 1e-6);
    CHECK(verify_theorem_T(rank2_example()).residual < 1e-6);
}

TEST_CASE("residual is invariant under plan changes and relabeling") {
    auto conn = beta_conn(Rational(1, 3), Rational(1, 4));
    double base_res = verify_theorem_T(conn).residual;

    PathPlanOptions move_base;
    move_base.base_override = Complex(0.3, -2.7);
    CHECK(verify_theorem_T(conn, default_plan(conn, move_base)).residual < 1e-7);

    PathPlanOptions half_radius;
    half_radius.disc_scale = 0.5;
    CHECK(verify_theorem_T(conn, default_plan(conn, half_radius)).residual < 1e-7);

    // relabeling the points
    auto swapped = LogConnection::rank1({Rational(1), Rational(0)},
                                        {Rational(1, 4), Rational(1, 3)});
    CHECK(verify_theorem_T(swapped).residual < 1e-7);
    CHECK(base_res < 1e-8);
}

TEST_CASE("residual is invariant under affine reparametrization") {
    // t -> 3t + 2 moves the points, residues unchanged
    auto moved = LogConnection::rank1({Rational(2), Rational(5), Rational(8)},
                                      {Rational(1, 3), Rational(1, 4), Rational(1, 5)});
    CHECK(verify_theorem_T(moved).residual < 1e-6);
}

TEST_CASE("base frame change is the expected determinant bookkeeping") {
    auto conn = beta_conn(Rational(1, 3), Rational(1, 4));
    PathPlan plan = default_plan(conn);
    TransportOptions opt;
    PeriodPairing p1 = period_pairing(conn, plan, opt);
    CMatrix C(1, 1);
    C(0, 0) = Complex(1.7, 0.4);
    PeriodPairing p2 = period_pairing(conn, plan, opt, &C);
    // det H scales by det(C)^{-(d-1) r}; the compensating Betti factor makes
    // the final residual a no-op, verified here as the bookkeeping identity
    Complex expect = p1.det_Hc / C(0, 0);
    CHECK(std::abs(p2.det_Hc - expect) < 1e-9 * std::abs(expect));
}

TEST_CASE("period_pairing rejects non-admissible input") {
    auto bad = LogConnection::rank1({Rational(0), Rational(1)},
                                    {Rational(1, 2), Rational(-1, 4)});
    PathPlan plan = default_plan(bad);
    CHECK_THROWS(period_pairing(bad, plan));
}
