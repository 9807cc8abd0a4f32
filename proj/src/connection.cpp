#include "perdet/connection.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace perdet {

LogConnection LogConnection::rank1(std::vector<Rational> pts, std::vector<Rational> exps,
                                   std::string label) {
    LogConnection c;
    c.rank = 1;
    c.points = std::move(pts);
    for (const auto& a : exps) {
        QMatrix m(1, 1);
        m(0, 0) = a;
        c.residues.push_back(m);
    }
    c.label = std::move(label);
    c.validate();
    return c;
}

void LogConnection::validate() const {
    if (rank < 1) throw std::invalid_argument("connection rank must be >= 1");
    if (points.size() != residues.size())
        throw std::invalid_argument("points/residues length mismatch");
    std::set<Rational> seen;
    for (const auto& p : points)
        if (!seen.insert(p).second) throw std::invalid_argument("singular points must be distinct");
    for (const auto& m : residues)
        if (m.rows() != rank || m.cols() != rank)
            throw std::invalid_argument("residue matrix size != rank");
}

QMatrix LogConnection::residue_infinity() const {
    QMatrix s(rank, rank);
    for (const auto& m : residues) s = s + m;
    return -s;
}

QMatrix residue_at(const LogConnection& conn, const P1Point& x) {
    if (x.at_infinity) return conn.residue_infinity();
    for (size_t i = 0; i < conn.points.size(); ++i)
        if (conn.points[i] == x.value) return conn.residues[i];
    return QMatrix(conn.rank, conn.rank);  // zero at non-singular points
}

Poly char_poly_at(const LogConnection& conn, const P1Point& x) {
    if (x.at_infinity) {
        Poly phi = char_poly(conn.residue_infinity());
        // infinity twist bookkeeping shifts the char poly, T -> T + n
        return phi.shift(Rational(conn.infinity_twist));
    }
    return char_poly(residue_at(conn, x));
}

LogConnection twist(const LogConnection& conn, const ExtensionTwist& tw) {
    LogConnection out = conn;
    for (const auto& [i, n] : tw.multiples) {
        if (i >= out.residues.size()) throw std::out_of_range("twist index");
        QMatrix shift = Rational(n) * QMatrix::identity(out.rank);
        out.residues[i] = out.residues[i] - shift;
    }
    out.infinity_twist += tw.infinity;
    return out;
}

namespace {

bool has_integer_root(const Poly& phi, bool nonpositive) {
    for (const auto& [r, m] : rational_roots(phi)) {
        (void)m;
        if (!is_integer(r)) continue;
        if (nonpositive && r <= 0) return true;
        if (!nonpositive && r >= 1) return true;
    }
    return false;
}

}  // namespace

bool is_small_at(const LogConnection& conn, size_t i) {
    return !has_integer_root(char_poly(conn.residues[i]), /*nonpositive=*/true);
}

bool is_big_at(const LogConnection& conn, size_t i) {
    return !has_integer_root(char_poly(conn.residues[i]), /*nonpositive=*/false);
}

bool is_small(const LogConnection& conn) {
    for (size_t i = 0; i < conn.residues.size(); ++i)
        if (!is_small_at(conn, i)) return false;
    return true;
}

bool is_big(const LogConnection& conn) {
    for (size_t i = 0; i < conn.residues.size(); ++i)
        if (!is_big_at(conn, i)) return false;
    return true;
}

LogConnection dual_connection(const LogConnection& conn) {
    LogConnection out = conn;
    out.label = conn.label.empty() ? "dual" : conn.label + "-dual";
    for (auto& m : out.residues) m = QMatrix::identity(conn.rank) - m;
    return out;
}

CanonicalizeResult canonical_normalize(const LogConnection& conn) {
    ExtensionTwist tw;
    for (size_t i = 0; i < conn.residues.size(); ++i) {
        Poly phi = char_poly(conn.residues[i]);
        auto roots = rational_roots(phi);
        int total = 0;
        for (const auto& [r, m] : roots) total += m;
        if (total != phi.degree())
            throw std::domain_error("canonical_normalize: irrational residue eigenvalues at point " +
                                    to_string(conn.points[i]));
        // eigenvalue tau moves to tau + n in (0,1] <=> n = -ceil(tau) + 1; must agree
        std::optional<long> shift;
        for (const auto& [r, m] : roots) {
            (void)m;
            // smallest n with r + n in (0,1]: n = 1 - ceil(r)
            BigInt ceil_r = -rat_floor(-r);
            BigInt n = 1 - ceil_r;
            long nl = static_cast<long>(n);
            if (!shift) {
                shift = nl;
            } else if (*shift != nl) {
                throw std::domain_error(
                    "canonical_normalize: non-uniform eigenvalue shifts at one point");
            }
        }
        if (shift && *shift != 0) tw.multiples[i] = -*shift;
        // twist() subtracts n*Id, moving eigenvalue tau to tau - n; we want tau + shift
    }
    return {twist(conn, tw), tw};
}

bool theorem_T_admissible(const LogConnection& conn, double margin) {
    conn.validate();
    std::vector<std::pair<double, bool>> parts;  // (real part, expect positive)
    for (const auto& m : conn.residues)
        for (const auto& root : complex_roots(char_poly(m)))
            parts.emplace_back(root.value.real(), true);
    for (const auto& root : complex_roots(char_poly(conn.residue_infinity())))
        parts.emplace_back(root.value.real(), false);
    for (const auto& [re, positive] : parts) {
        (void)positive;
        if (std::abs(re) < margin)
            throw std::domain_error("theorem_T_admissible: eigenvalue real part on boundary");
    }
    for (const auto& [re, positive] : parts)
        if (positive != (re > 0)) return false;
    return true;
}

RatFunc phi_aggregate(const LogConnection& conn) {
    Poly phi = Poly::constant(Rational(1));
    for (const auto& m : conn.residues) phi = phi * char_poly(m);
    if (conn.include_infinity) phi = phi * char_poly_at(conn, P1Point::infinity());
    return RatFunc(phi);
}

GammaValue gamma_of_connection(const LogConnection& conn) {
    return gamma_of_rf(phi_aggregate(conn));
}

Complex theorem_T_gamma_factor(const LogConnection& conn) {
    Complex out(1.0, 0.0);
    for (const auto& m : conn.residues) {
        GammaValue g = gamma_of_matrix(m);
        if (g.condition != GammaCondition::ok)
            throw std::domain_error("gamma factor: residue eigenvalue at a pole");
        out *= g.value;
    }
    QMatrix binf = conn.residue_infinity();
    Rational tr = binf.trace();
    out *= std::exp(Complex(0.0, M_PI * to_double(tr)));
    GammaValue g = gamma_of_matrix(QMatrix::identity(conn.rank) - binf);
    if (g.condition != GammaCondition::ok)
        throw std::domain_error("gamma factor: 1 - res_inf eigenvalue at a pole");
    out /= g.value;
    return out;
}

}  // namespace perdet
