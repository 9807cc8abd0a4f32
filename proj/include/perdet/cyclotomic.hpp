#pragma once

#include "perdet/rational.hpp"

#include <vector>

namespace perdet {

// Z[zeta_m], integer coefficient vectors modulo the m-th cyclotomic polynomial.
class CyclotomicInt {
public:
    CyclotomicInt() = default;
    explicit CyclotomicInt(long m);
    static CyclotomicInt zeta_power(long m, long k);   // zeta_m^k
    static CyclotomicInt integer(long m, const BigInt& n);

    long conductor() const { return m_; }
    size_t dim() const { return coeff_.size(); }  // phi(m)
    const std::vector<BigInt>& coefficients() const { return coeff_; }

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator-=(const CyclotomicInt& o);
    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
    bool operator==(const CyclotomicInt& o) const {
        return m_ == o.m_ && coeff_ == o.coeff_;
    }

    CyclotomicInt conjugate() const;          // zeta -> zeta^{-1}
    CyclotomicInt galois(long s) const;       // zeta -> zeta^s, gcd(s, m) = 1
    CyclotomicInt lift_to(long M) const;      // into Z[zeta_M], m | M
    BigInt norm_squared_if_integer() const;   // value of self * conj when rational integer
    bool is_rational_integer(BigInt& value) const;

    Complex to_complex() const;

    // m-th cyclotomic polynomial, integer coefficients lowest first
    static std::vector<BigInt> cyclotomic_polynomial(long m);

private:
    long m_ = 1;
    std::vector<BigInt> coeff_;                 // length phi(m)
    std::vector<std::vector<BigInt>> redtable_; // zeta^k for k in [phi(m), 2 phi(m)-2]
    void reduce_degree(std::vector<BigInt>& c) const;
    void build_table();
};

}  // namespace perdet
