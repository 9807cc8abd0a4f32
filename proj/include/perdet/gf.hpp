#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace perdet {

// F_{p^e} with a discrete-log table. Elements are coefficient vectors of
// F_p[T]/(modulus), packed as indices 0..p^e-1 (base-p digits, lowest first).
class GF {
public:
    using Elem = uint32_t;  // packed element index

    // Deterministic construction: smallest irreducible monic modulus in the
    // enumeration order, smallest generator.
    GF(long p, int e);
    // Explicit modulus (monic, coefficients mod p, length e+1, lowest first).
    // Verifies irreducibility; generator found by search unless supplied.
    GF(long p, int e, std::vector<long> modulus, long generator = -1);

    long p() const { return p_; }
    int e() const { return e_; }
    long order() const { return q_; }  // p^e
    const std::vector<long>& modulus() const { return modulus_; }
    Elem generator() const { return gen_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long c) const;  // image of integer (prime subfield)
    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, long long k) const;

    // trace to F_p as an integer in [0, p)
    long trace(Elem a) const;
    // discrete log base the generator; a != 0
    long dlog(Elem a) const;
    Elem exp(long k) const;  // generator^k (k mod q-1)

    // all elements 0..q-1 are valid Elem values
    static bool is_prime(long n);
    static bool is_irreducible(long p, const std::vector<long>& modulus);

private:
    void build_tables();
    std::vector<long> unpack(Elem a) const;
    Elem pack(const std::vector<long>& c) const;
    Elem mul_slow(Elem a, Elem b) const;

    long p_;
    int e_;
    long q_;
    std::vector<long> modulus_;  // length e+1, monic
    Elem gen_ = 0;
    std::vector<long> log_;      // log_[a] for a != 0
    std::vector<Elem> exp_;      // exp_[k] = gen^k, k in [0, q-1)
    std::vector<long> trace_;    // absolute trace per element
};

}  // namespace perdet
