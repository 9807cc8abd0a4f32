#include "perdet/cyclotomic.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace perdet {

namespace {

// divide integer polynomials exactly: a / b, both lowest-first, b monic-ish
std::vector<BigInt> int_poly_div(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    std::vector<BigInt> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (true) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() < b.size()) break;
        BigInt f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    }
    return q;
}

}  // namespace

std::vector<BigInt> CyclotomicInt::cyclotomic_polynomial(long m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    if (m == 1) return {BigInt(-1), BigInt(1)};
    std::vector<BigInt> acc(static_cast<size_t>(m) + 1);
    acc[0] = -1;
    acc[static_cast<size_t>(m)] = 1;
    for (long d = 1; d < m; ++d)
        if (m % d == 0) acc = int_poly_div(std::move(acc), cyclotomic_polynomial(d));
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    return acc;
}

CyclotomicInt::CyclotomicInt(long m) : m_(m) {
    if (m < 1) throw std::invalid_argument("cyclotomic conductor must be >= 1");
    auto phi = cyclotomic_polynomial(m);
    coeff_.assign(phi.size() - 1, BigInt(0));
    build_table();
}

void CyclotomicInt::build_table() {
    auto phi = cyclotomic_polynomial(m_);
    size_t n = phi.size() - 1;
    // reduced coefficient vectors of zeta^k for k = 0 .. max(m-1, 2n-2)
    size_t kmax = std::max<size_t>(static_cast<size_t>(m_ - 1), 2 * n - 2);
    redtable_.assign(kmax + 1, std::vector<BigInt>(n));
    redtable_[0][0] = 1;
    for (size_t k = 1; k <= kmax; ++k) {
        const auto& prev = redtable_[k - 1];
        auto& cur = redtable_[k];
        BigInt overflow = prev[n - 1];
        for (size_t i = n; i-- > 1;) cur[i] = prev[i - 1];
        cur[0] = 0;
        if (overflow != 0) {
            // zeta^n = -(phi_0 + ... + phi_{n-1} zeta^{n-1}), phi monic
            for (size_t i = 0; i < n; ++i) cur[i] -= overflow * phi[i];
        }
    }
}

CyclotomicInt CyclotomicInt::zeta_power(long m, long k) {
    CyclotomicInt z(m);
    long kk = ((k % m) + m) % m;
    z.coeff_ = z.redtable_[static_cast<size_t>(kk)];
    return z;
}

CyclotomicInt CyclotomicInt::integer(long m, const BigInt& v) {
    CyclotomicInt z(m);
    z.coeff_[0] = v;
    return z;
}

void CyclotomicInt::reduce_degree(std::vector<BigInt>& c) const {
    size_t n = coeff_.size();
    std::vector<BigInt> out(n);
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        const auto& row = redtable_[k];
        for (size_t i = 0; i < n; ++i) out[i] += c[k] * row[i];
    }
    c = std::move(out);
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    if (m_ != o.m_) throw std::invalid_argument("cyclotomic conductor mismatch");
    for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
    if (m_ != o.m_) throw std::invalid_argument("cyclotomic conductor mismatch");
    for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.conductor() != b.conductor())
        throw std::invalid_argument("cyclotomic conductor mismatch");
    size_t n = a.coefficients().size();
    std::vector<BigInt> c(2 * n - 1);
    for (size_t i = 0; i < n; ++i) {
        if (a.coefficients()[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) c[i + j] += a.coefficients()[i] * b.coefficients()[j];
    }
    CyclotomicInt out(a.conductor());
    out.reduce_degree(c);
    out.coeff_ = std::move(c);
    return out;
}

CyclotomicInt CyclotomicInt::galois(long s) const {
    s = ((s % m_) + m_) % m_;
    if (std::gcd(s, m_) != 1) throw std::invalid_argument("galois: exponent not coprime to m");
    CyclotomicInt out(m_);
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        const auto& row = redtable_[static_cast<size_t>(static_cast<long>(i) * s % m_)];
        for (size_t j = 0; j < coeff_.size(); ++j) out.coeff_[j] += coeff_[i] * row[j];
    }
    return out;
}

CyclotomicInt CyclotomicInt::conjugate() const {
    return m_ == 1 ? *this : galois(m_ - 1);
}

CyclotomicInt CyclotomicInt::lift_to(long M) const {
    if (M % m_ != 0) throw std::invalid_argument("lift_to: conductor must be a multiple");
    if (M == m_) return *this;
    CyclotomicInt out(M);
    long step = M / m_;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        const auto& row = out.redtable_[static_cast<size_t>(static_cast<long>(i) * step)];
        for (size_t j = 0; j < out.coeff_.size(); ++j) out.coeff_[j] += coeff_[i] * row[j];
    }
    return out;
}

bool CyclotomicInt::is_rational_integer(BigInt& value) const {
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) return false;
    value = coeff_[0];
    return true;
}

BigInt CyclotomicInt::norm_squared_if_integer() const {
    CyclotomicInt p = (*this) * conjugate();
    BigInt v;
    if (!p.is_rational_integer(v))
        throw std::domain_error("norm squared is not a rational integer");
    return v;
}

Complex CyclotomicInt::to_complex() const {
    Complex out(0.0, 0.0);
    for (size_t i = 0; i < coeff_.size(); ++i) {
        double c = static_cast<double>(coeff_[i]);
        double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(m_);
        out += c * Complex(std::cos(ang), std::sin(ang));
    }
    return out;
}

}  // namespace perdet
