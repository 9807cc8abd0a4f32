#include "perdet/runner.hpp"

namespace perdet {

namespace {

QMatrix mat1(const Rational& a) {
    QMatrix m(1, 1);
    m(0, 0) = a;
    return m;
}

QMatrix mat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    QMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

CheckConfig periods_rank1(const std::string& id, std::vector<Rational> pts,
                          std::vector<Rational> exps, double tol) {
    CheckConfig c;
    c.kind = CheckKind::periods;
    c.id = id;
    c.rank = 1;
    c.points = std::move(pts);
    for (const auto& a : exps) c.residues.push_back(mat1(a));
    c.tol = tol;
    return c;
}

}  // namespace

std::vector<LogConnection> monodromy_catalog() {
    std::vector<LogConnection> out;
    auto r1 = [](std::vector<Rational> pts, std::vector<Rational> exps, const char* label) {
        return LogConnection::rank1(std::move(pts), std::move(exps), label);
    };
    out.push_back(r1({Rational(0), Rational(1)}, {Rational(1, 2), Rational(1, 3)}, "m1"));
    out.push_back(r1({Rational(0), Rational(1)}, {Rational(1, 5), Rational(2, 5)}, "m2"));
    out.push_back(r1({Rational(0), Rational(1), Rational(2)},
                     {Rational(1, 3), Rational(1, 4), Rational(1, 5)}, "m3"));
    out.push_back(r1({Rational(0), Rational(2)}, {Rational(3, 7), Rational(2, 7)}, "m4"));
    out.push_back(r1({Rational(-1), Rational(1)}, {Rational(1, 2), Rational(1, 2)}, "m5"));
    out.push_back(r1({Rational(0), Rational(1), Rational(3)},
                     {Rational(2, 3), Rational(1, 6), Rational(1, 7)}, "m6"));
    out.push_back(r1({Rational(0), Rational(1), Rational(2), Rational(4)},
                     {Rational(1, 3), Rational(1, 4), Rational(1, 5), Rational(1, 7)}, "m7"));
    out.push_back(r1({Rational(5), Rational(7)}, {Rational(1, 2), Rational(1, 4)}, "m8"));
    {
        LogConnection c;
        c.rank = 2;
        c.points = {Rational(0), Rational(1)};
        c.residues = {mat2(Rational(1, 2), Rational(1), Rational(0), Rational(1, 3)),
                      mat2(Rational(1, 4), Rational(0), Rational(0), Rational(1, 5))};
        c.label = "m9-rank2";
        out.push_back(c);
    }
    {
        // residue zero at one marked point: its loop is trivial
        LogConnection c;
        c.rank = 2;
        c.points = {Rational(0), Rational(1)};
        c.residues = {mat2(Rational(1, 2), Rational(0), Rational(0), Rational(1, 3)),
                      QMatrix(2, 2)};
        c.label = "m10-zero-residue";
        out.push_back(c);
    }
    return out;
}

std::vector<CheckConfig> builtin_catalog() {
    std::vector<CheckConfig> out;

    out.push_back(periods_rank1("beta-half", {Rational(0), Rational(1)},
                                {Rational(1, 2), Rational(1, 2)}, 1e-8));
    out.push_back(periods_rank1("beta-third-quarter", {Rational(0), Rational(1)},
                                {Rational(1, 3), Rational(1, 4)}, 1e-8));
    out.push_back(periods_rank1("rank1-d3", {Rational(0), Rational(1), Rational(2)},
                                {Rational(1, 3), Rational(1, 4), Rational(1, 5)}, 1e-6));
    {
        CheckConfig c;
        c.kind = CheckKind::periods;
        c.id = "rank2-triangular";
        c.rank = 2;
        c.points = {Rational(0), Rational(1)};
        c.residues = {mat2(Rational(1, 2), Rational(1), Rational(0), Rational(1, 3)),
                      mat2(Rational(1, 4), Rational(0), Rational(0), Rational(1, 5))};
        c.tol = 1e-6;
        out.push_back(c);
    }
    {
        CheckConfig c;
        c.kind = CheckKind::monodromy;
        c.id = "monodromy-catalog";
        c.mode = "catalog";
        c.tol = 1e-8;
        out.push_back(c);
    }
    {
        CheckConfig c;
        c.kind = CheckKind::gamma;
        c.id = "gamma-dpartial";
        c.mode = "dpartial";
        c.count = 100;
        c.tol = 1e-10;
        out.push_back(c);
    }
    {
        CheckConfig c;
        c.kind = CheckKind::gamma;
        c.id = "gamma-gauss-mult";
        c.mode = "gauss-mult";
        c.count = 100;  // 50 per m
        c.tol = 1e-9;
        out.push_back(c);
    }
    {
        CheckConfig c = periods_rank1("symbol-beta", {Rational(0), Rational(1)},
                                      {Rational(1, 2), Rational(1, 2)}, 1e-7);
        c.kind = CheckKind::symbol;
        out.push_back(c);
    }
    {
        CheckConfig c;
        c.kind = CheckKind::reciprocity;
        c.id = "reciprocity-random";
        c.count = 100;
        c.seed = 42;
        out.push_back(c);
    }
    {
        CheckConfig c;
        c.kind = CheckKind::chow;
        c.id = "chow-exactness";
        c.count = 100;
        c.seed = 42;
        c.divisor_points = {Rational(0), Rational(1)};
        c.divisor_infinity = true;
        out.push_back(c);
    }
    for (int npts : {2, 3, 4}) {
        CheckConfig c;
        c.kind = CheckKind::chow;
        c.mode = "canonical";
        c.id = "canonical-class-" + std::to_string(npts) + "pts";
        c.divisor_infinity = true;
        for (int i = 0; i + 1 < npts; ++i) c.divisor_points.push_back(Rational(i));
        out.push_back(c);
    }
    {
        CheckConfig c;
        c.kind = CheckKind::jacobi;
        c.id = "lemma55-grid";
        c.mode = "lemma55";
        c.q = 200;
        out.push_back(c);
    }
    {
        CheckConfig c;
        c.kind = CheckKind::jacobi;
        c.id = "gauss-moduli";
        c.mode = "moduli";
        c.q = 10000;
        c.tol = 1e-8;
        out.push_back(c);
    }
    {
        CheckConfig c;
        c.kind = CheckKind::jacobi;
        c.id = "jacobi-third-7";
        c.mode = "value";
        c.q = 7;
        c.bsupport = {{Rational(1, 3), 1}, {Rational(2, 3), 1}};
        out.push_back(c);
    }
    {
        CheckConfig c;
        c.kind = CheckKind::jacobi;
        c.id = "jacobi-quarter-5";
        c.mode = "value";
        c.q = 5;
        c.bsupport = {{Rational(1, 4), 1}, {Rational(3, 4), 1}};
        out.push_back(c);
    }
    for (auto [m, q] : std::vector<std::pair<long, long>>{{3, 7}, {3, 13}, {4, 5}, {4, 13}, {5, 11}}) {
        CheckConfig c;
        c.kind = CheckKind::fermat_count;
        c.id = "fermat-" + std::to_string(m) + "-" + std::to_string(q);
        c.m = m;
        c.q = q;
        out.push_back(c);
    }
    {
        CheckConfig c = periods_rank1("heuristic-beta-half", {Rational(0), Rational(1)},
                                      {Rational(1, 2), Rational(1, 2)}, 1e-9);
        c.mode = "heuristic";
        out.push_back(c);
    }
    {
        CheckConfig c = periods_rank1("heuristic-beta-third", {Rational(0), Rational(1)},
                                      {Rational(1, 3), Rational(1, 3)}, 1e-9);
        c.mode = "heuristic";
        out.push_back(c);
    }
    {
        CheckConfig c = periods_rank1("heuristic-negative-control", {Rational(0), Rational(1)},
                                      {Rational(1, 2), Rational(1, 2)}, 1e-9);
        c.mode = "heuristic-negative";
        out.push_back(c);
    }
    return out;
}

}  // namespace perdet
