#include "perdet/gf.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace perdet {

namespace {

long mod_pow(long b, long long k, long m) {
    long long r = 1, x = b % m;
    while (k > 0) {
        if (k & 1) r = r * x % m;
        x = x * x % m;
        k >>= 1;
    }
    return static_cast<long>(r);
}

// polynomial arithmetic over F_p, coefficients lowest first
using FpPoly = std::vector<long>;

FpPoly fp_trim(FpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return fp_trim(std::move(c));
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, long p) {
    a = fp_trim(std::move(a));
    long lead_inv = mod_pow(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        long f = a.back() * lead_inv % p;
        size_t off = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[off + i] = ((a[off + i] - f * m[i]) % p + p) % p;
        a = fp_trim(std::move(a));
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// T^(p^k) mod m, by k-fold Frobenius of T
FpPoly fp_frob_pow(const FpPoly& m, long p, int k) {
    FpPoly x = {0, 1};  // T
    for (int i = 0; i < k; ++i) {
        // x <- x^p mod m
        FpPoly r = {1};
        FpPoly base = x;
        long kk = p;
        while (kk > 0) {
            if (kk & 1) r = fp_mod(fp_mul(r, base, p), m, p);
            base = fp_mod(fp_mul(base, base, p), m, p);
            kk >>= 1;
        }
        x = r;
    }
    return x;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> f;
    for (long d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            if (f.empty() || f.back() != d) f.push_back(d);
            n /= d;
        }
    if (n > 1) f.push_back(n);
    return f;
}

}  // namespace

bool GF::is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool GF::is_irreducible(long p, const std::vector<long>& modulus) {
    FpPoly m = fp_trim(modulus);
    int e = static_cast<int>(m.size()) - 1;
    if (e <= 0) return false;
    if (e == 1) return true;
    // T^(p^e) == T mod m
    FpPoly t_pe = fp_frob_pow(m, p, e);
    FpPoly t = {0, 1};
    {
        FpPoly diff = t_pe;
        diff.resize(std::max(diff.size(), t.size()), 0);
        for (size_t i = 0; i < t.size(); ++i) diff[i] = ((diff[i] - t[i]) % p + p) % p;
        if (!fp_trim(std::move(diff)).empty()) return false;
    }
    // gcd(T^(p^(e/l)) - T, m) == 1 for each prime l | e
    for (long l : prime_factors(e)) {
        FpPoly t_pk = fp_frob_pow(m, p, e / static_cast<int>(l));
        FpPoly diff = t_pk;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        diff = fp_trim(std::move(diff));
        FpPoly g = fp_gcd(m, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

GF::GF(long p, int e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("GF: p is not prime");
    if (e < 1 || std::pow(static_cast<double>(p), e) > 2.1e9)
        throw std::invalid_argument("GF: bad extension degree");
    q_ = 1;
    for (int i = 0; i < e; ++i) q_ *= p;
    if (e == 1) {
        modulus_ = {0, 1};  // T (unused)
    } else {
        // smallest monic irreducible in base-p enumeration of the lower coefficients
        std::vector<long> m(static_cast<size_t>(e) + 1, 0);
        m[static_cast<size_t>(e)] = 1;
        bool found = false;
        for (long code = 1; code < q_ && !found; ++code) {
            long c = code;
            for (int i = 0; i < e; ++i) {
                m[static_cast<size_t>(i)] = c % p;
                c /= p;
            }
            if (is_irreducible(p, m)) found = true;
        }
        if (!found) throw std::runtime_error("GF: no irreducible modulus found");
        modulus_ = m;
    }
    build_tables();
}

GF::GF(long p, int e, std::vector<long> modulus, long generator) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("GF: p is not prime");
    q_ = 1;
    for (int i = 0; i < e; ++i) q_ *= p;
    for (auto& c : modulus) c = ((c % p) + p) % p;
    if (static_cast<int>(modulus.size()) != e + 1 || modulus.back() != 1)
        throw std::invalid_argument("GF: modulus must be monic of degree e");
    if (e > 1 && !is_irreducible(p, modulus)) throw std::invalid_argument("GF: reducible modulus");
    modulus_ = std::move(modulus);
    if (generator >= 0) {
        // verify multiplicative order q-1 below in build_tables
        gen_ = static_cast<Elem>(generator);
    }
    build_tables();
}

std::vector<long> GF::unpack(Elem a) const {
    std::vector<long> c(static_cast<size_t>(e_));
    long v = a;
    for (int i = 0; i < e_; ++i) {
        c[static_cast<size_t>(i)] = v % p_;
        v /= p_;
    }
    return c;
}

GF::Elem GF::pack(const std::vector<long>& c) const {
    long v = 0;
    for (int i = e_ - 1; i >= 0; --i) v = v * p_ + (i < static_cast<int>(c.size()) ? c[static_cast<size_t>(i)] : 0);
    return static_cast<Elem>(v);
}

GF::Elem GF::mul_slow(Elem a, Elem b) const {
    FpPoly pa = unpack(a), pb = unpack(b);
    FpPoly prod = fp_mod(fp_mul(fp_trim(std::move(pa)), fp_trim(std::move(pb)), p_), modulus_, p_);
    return pack(prod);
}

void GF::build_tables() {
    // find generator if not supplied
    auto order_ok = [&](Elem g) {
        if (g == 0) return false;
        for (long l : prime_factors(q_ - 1)) {
            // g^((q-1)/l) != 1
            Elem acc = 1;
            long long k = (q_ - 1) / l;
            Elem base = g;
            while (k > 0) {
                if (k & 1) acc = mul_slow(acc, base);
                base = mul_slow(base, base);
                k >>= 1;
            }
            if (acc == 1) return false;
        }
        return true;
    };
    if (gen_ != 0) {
        if (!order_ok(gen_)) throw std::invalid_argument("GF: supplied element is not a generator");
    } else {
        for (long g = 2; g < q_; ++g)
            if (order_ok(static_cast<Elem>(g))) {
                gen_ = static_cast<Elem>(g);
                break;
            }
        if (gen_ == 0 && q_ == 2) gen_ = 1;
        if (gen_ == 0) throw std::runtime_error("GF: no generator found");
    }
    exp_.assign(static_cast<size_t>(q_ - 1), 0);
    log_.assign(static_cast<size_t>(q_), -1);
    Elem x = 1;
    for (long k = 0; k < q_ - 1; ++k) {
        exp_[static_cast<size_t>(k)] = x;
        if (log_[x] != -1) throw std::invalid_argument("GF: generator order < q-1");
        log_[x] = k;
        x = mul_slow(x, gen_);
    }
    if (x != 1) throw std::runtime_error("GF: generator power wrap failed");
    // traces
    trace_.assign(static_cast<size_t>(q_), 0);
    for (long a = 0; a < q_; ++a) {
        // tr(a) = sum a^(p^i); compute via packed mul
        Elem acc = 0;
        Elem cur = static_cast<Elem>(a);
        for (int i = 0; i < e_; ++i) {
            acc = add(acc, cur);
            // cur <- cur^p
            Elem f = 1;
            Elem base = cur;
            long k = p_;
            while (k > 0) {
                if (k & 1) f = mul_slow(f, base);
                base = mul_slow(base, base);
                k >>= 1;
            }
            cur = f;
        }
        // acc lies in the prime subfield: packed value is the constant digit
        assert(acc < static_cast<Elem>(p_));
        trace_[static_cast<size_t>(a)] = acc % p_;
    }
}

GF::Elem GF::from_int(long c) const {
    long v = ((c % p_) + p_) % p_;
    return static_cast<Elem>(v);
}

GF::Elem GF::add(Elem a, Elem b) const {
    // digit-wise mod-p addition
    long r = 0, mul = 1, av = a, bv = b;
    for (int i = 0; i < e_; ++i) {
        long d = (av % p_ + bv % p_) % p_;
        r += d * mul;
        mul *= p_;
        av /= p_;
        bv /= p_;
    }
    return static_cast<Elem>(r);
}

GF::Elem GF::neg(Elem a) const {
    long r = 0, mul = 1, av = a;
    for (int i = 0; i < e_; ++i) {
        long d = (p_ - av % p_) % p_;
        r += d * mul;
        mul *= p_;
        av /= p_;
    }
    return static_cast<Elem>(r);
}

GF::Elem GF::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    long k = log_[a] + log_[b];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[static_cast<size_t>(k)];
}

GF::Elem GF::inv(Elem a) const {
    if (a == 0) throw std::domain_error("GF: inverse of zero");
    long k = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[static_cast<size_t>(k)];
}

GF::Elem GF::pow(Elem a, long long k) const {
    if (a == 0) {
        if (k <= 0) throw std::domain_error("GF: 0^k for k <= 0");
        return 0;
    }
    long long m = (q_ - 1);
    long long kk = ((k % m) + m) % m;
    return exp_[static_cast<size_t>(log_[a] * kk % m)];
}

long GF::trace(Elem a) const { return trace_[a]; }

long GF::dlog(Elem a) const {
    if (a == 0) throw std::domain_error("GF: dlog of zero");
    return log_[a];
}

GF::Elem GF::exp(long k) const {
    long m = q_ - 1;
    long kk = ((k % m) + m) % m;
    return exp_[static_cast<size_t>(kk)];
}

}  // namespace perdet
