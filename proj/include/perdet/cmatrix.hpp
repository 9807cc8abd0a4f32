#pragma once

#include <cassert>
#include <complex>
#include <stdexcept>
#include <vector>

namespace perdet {

// Small dense complex matrix for the numeric period engine.
class CMatrix {
public:
    using C = std::complex<double>;
    CMatrix() = default;
    CMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static CMatrix identity(size_t n) {
        CMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = C(1.0, 0.0);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    C& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const C& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    C* data() { return e_.data(); }
    const C* data() const { return e_.data(); }
    size_t size() const { return e_.size(); }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        assert(a.cols_ == b.rows_);
        CMatrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                C aik = a(i, k);
                if (aik == C(0.0, 0.0)) continue;
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend CMatrix operator+(const CMatrix& a, const CMatrix& b) {
        CMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b) {
        CMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend CMatrix operator*(C s, const CMatrix& a) {
        CMatrix r = a;
        for (auto& x : r.e_) x *= s;
        return r;
    }

    C det() const {
        assert(rows_ == cols_);
        CMatrix a = *this;
        size_t n = rows_;
        C d(1.0, 0.0);
        for (size_t c = 0; c < n; ++c) {
            size_t piv = c;
            for (size_t r = c + 1; r < n; ++r)
                if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
            if (std::abs(a(piv, c)) == 0.0) return C(0.0, 0.0);
            if (piv != c) {
                for (size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
                d = -d;
            }
            d *= a(c, c);
            for (size_t r = c + 1; r < n; ++r) {
                C f = a(r, c) / a(c, c);
                if (f == C(0.0, 0.0)) continue;
                for (size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
            }
        }
        return d;
    }

    CMatrix inverse() const {
        assert(rows_ == cols_);
        size_t n = rows_;
        CMatrix a = *this;
        CMatrix inv = CMatrix::identity(n);
        for (size_t c = 0; c < n; ++c) {
            size_t piv = c;
            for (size_t r = c + 1; r < n; ++r)
                if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
            if (std::abs(a(piv, c)) == 0.0) throw std::domain_error("singular matrix");
            if (piv != c)
                for (size_t j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(c, j));
                    std::swap(inv(piv, j), inv(c, j));
                }
            C pv = a(c, c);
            for (size_t j = 0; j < n; ++j) {
                a(c, j) /= pv;
                inv(c, j) /= pv;
            }
            for (size_t r = 0; r < n; ++r) {
                if (r == c) continue;
                C f = a(r, c);
                if (f == C(0.0, 0.0)) continue;
                for (size_t j = 0; j < n; ++j) {
                    a(r, j) -= f * a(c, j);
                    inv(r, j) -= f * inv(c, j);
                }
            }
        }
        return inv;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : e_) m = std::max(m, std::abs(x));
        return m;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<C> e_;
};

// Eigenvalues of a small complex matrix via its characteristic polynomial
// (numeric companion-free route: Leverrier + root solve happens on the Q side;
// here we only need eigenvalues of monodromy matrices, computed from the
// characteristic polynomial by Aberth on double coefficients).
std::vector<std::complex<double>> eigenvalues(const CMatrix& m);

}  // namespace perdet
