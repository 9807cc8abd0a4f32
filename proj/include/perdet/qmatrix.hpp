#pragma once

#include "perdet/poly.hpp"

#include <stdexcept>
#include <vector>

namespace perdet {

// Dense matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static QMatrix identity(size_t n) {
        QMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        if (rows.empty()) return QMatrix();
        QMatrix m(rows.size(), rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    Rational& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
        QMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
        QMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend QMatrix operator*(const Rational& s, const QMatrix& a) {
        QMatrix r = a;
        for (auto& x : r.e_) x *= s;
        return r;
    }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
        QMatrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    QMatrix operator-() const {
        QMatrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }

    Rational trace() const {
        if (!square()) throw std::invalid_argument("trace of non-square matrix");
        Rational t(0);
        for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    Rational det() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

inline Rational QMatrix::det() const {
    if (!square()) throw std::invalid_argument("det of non-square matrix");
    QMatrix a = *this;
    size_t n = rows_;
    Rational d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            for (size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        for (size_t r = c + 1; r < n; ++r) {
            if (a(r, c) == 0) continue;
            Rational f = a(r, c) / a(c, c);
            for (size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return d;
}

// Characteristic polynomial det(T - M), monic of degree n, exact.
// Faddeev-LeVerrier: exact over Q, no pivoting concerns.
inline Poly char_poly(const QMatrix& m) {
    if (!m.square()) throw std::invalid_argument("char_poly of non-square matrix");
    size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    QMatrix Mk(n, n);  // zero
    for (size_t k = 1; k <= n; ++k) {
        // Mk = M * Mk + c[n-k+1] * I
        QMatrix t = m * Mk;
        for (size_t i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
        Mk = t;
        Rational tr = (m * Mk).trace();
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return Poly(std::move(c));
}

}  // namespace perdet
