#pragma once

#include "qzeta/mat.hpp"
#include "qzeta/quaternion.hpp"
#include "qzeta/series.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qzeta {

// Matrix whose entries are truncated power series, all sharing one
// truncation order. Equivalently, a truncated series with matrix
// coefficients; the entrywise view is the more convenient one here.
template <class C>
class SeriesMatrix {
public:
    SeriesMatrix(int rows, int cols, int order)
        : rows_(checked(rows)), cols_(checked(cols)), order_(order),
          e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), TruncatedSeries<C>(order)) {}

    static SeriesMatrix identity(int n, int order) {
        SeriesMatrix m(n, n, order);
        for (int i = 0; i < n; ++i) m(i, i) = TruncatedSeries<C>::one(order);
        return m;
    }

    // Lifts a constant matrix to degree-0 series entries.
    static SeriesMatrix constant(const Mat<C>& a, int order) {
        SeriesMatrix m(a.rows(), a.cols(), order);
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                m(i, j) = TruncatedSeries<C>(order, a(i, j));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int order() const { return order_; }

    TruncatedSeries<C>& operator()(int i, int j) { return e_.at(index(i, j)); }
    const TruncatedSeries<C>& operator()(int i, int j) const { return e_.at(index(i, j)); }

    SeriesMatrix operator-() const {
        SeriesMatrix r(rows_, cols_, order_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }

    SeriesMatrix& operator+=(const SeriesMatrix& o) {
        require_same_shape(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    SeriesMatrix& operator-=(const SeriesMatrix& o) {
        require_same_shape(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    friend SeriesMatrix operator+(SeriesMatrix a, const SeriesMatrix& b) { return a += b; }
    friend SeriesMatrix operator-(SeriesMatrix a, const SeriesMatrix& b) { return a -= b; }

    friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
        if (a.cols_ != b.rows_ || a.order_ != b.order_)
            throw std::invalid_argument(a.order_ != b.order_ ? "series order mismatch"
                                                             : "matrix shape mismatch");
        SeriesMatrix r(a.rows_, b.cols_, a.order_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const TruncatedSeries<C>& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b(k, j).is_zero()) continue;
                    r(i, j) += aik * b(k, j);
                }
            }
        return r;
    }

    // Entrywise multiplication by t^k.
    SeriesMatrix shifted(int k) const {
        SeriesMatrix r(rows_, cols_, order_);
        for (size_t l = 0; l < e_.size(); ++l) r.e_[l] = e_[l].shifted(k);
        return r;
    }

    SeriesMatrix transpose() const {
        SeriesMatrix r(cols_, rows_, order_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    void swap_rows(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(int a, int b) {
        for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.order_ == b.order_ && a.e_ == b.e_;
    }
    friend bool operator!=(const SeriesMatrix& a, const SeriesMatrix& b) { return !(a == b); }

private:
    static int checked(int v) {
        if (v < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
        return v;
    }
    size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    void require_same_shape(const SeriesMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
        if (order_ != o.order_) throw std::invalid_argument("series order mismatch");
    }

    int rows_, cols_, order_;
    std::vector<TruncatedSeries<C>> e_;
};

// Coefficientwise conjugation of every entry.
template <class C>
SeriesMatrix<C> conjugate(const SeriesMatrix<C>& m) {
    SeriesMatrix<C> r(m.rows(), m.cols(), m.order());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = conjugate(m(i, j));
    return r;
}

namespace detail {

// Cofactor expansion over the active columns `cols` and rows row..n-1.
// Exponential; reached only for matrices with no invertible constant-term
// pivot in some column, which the elimination path below hands off whole.
template <class C>
TruncatedSeries<C> det_cofactor(const SeriesMatrix<C>& a, int row, std::vector<int>& cols) {
    if (cols.empty()) return TruncatedSeries<C>::one(a.order());
    TruncatedSeries<C> acc(a.order());
    for (size_t idx = 0; idx < cols.size(); ++idx) {
        const TruncatedSeries<C>& entry = a(row, cols[idx]);
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t l = 0; l < cols.size(); ++l)
            if (l != idx) rest.push_back(cols[l]);
        TruncatedSeries<C> term = entry * det_cofactor(a, row + 1, rest);
        if (idx % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace detail

// Determinant of a square series matrix over a *commutative* coefficient
// ring (instantiated with Rational and GaussianRational). Gaussian
// elimination with invertible-constant-term pivots; every I - tN style
// matrix the zeta formulas produce eliminates fully on that path. A
// cofactor-expansion fallback keeps the function total on degenerate
// inputs.
template <class C>
TruncatedSeries<C> det_t(SeriesMatrix<C> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant requires a square matrix");
    const int n = a.rows();
    TruncatedSeries<C> det = TruncatedSeries<C>::one(a.order());
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).coeff(0).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) {
            std::vector<int> cols;
            for (int c = col; c < n; ++c) cols.push_back(c);
            TruncatedSeries<C> rest = detail::det_cofactor(a, col, cols);
            det *= rest;
            return sign < 0 ? -det : det;
        }
        if (pivot != col) {
            a.swap_rows(pivot, col);
            sign = -sign;
        }
        const TruncatedSeries<C> inv = a(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            const TruncatedSeries<C> f = a(r, col) * inv;
            for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
        det *= a(col, col);
    }
    return sign < 0 ? -det : det;
}

// Symplectic embedding, entrywise and coefficientwise: an m x n quaternion
// series matrix M = M_S + j M_P maps to the 2m x 2n complex series matrix
// [[M_S, -conj(M_P)], [M_P, conj(M_S)]]. Multiplicative on square matrices.
inline SeriesMatrix<GaussianRational> psi_t(const SeriesMatrix<Quaternion>& m) {
    const int rows = m.rows(), cols = m.cols(), order = m.order();
    SeriesMatrix<GaussianRational> r(2 * rows, 2 * cols, order);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            for (int k = 0; k <= order; ++k) {
                const Quaternion& q = m(i, j).coeff(k);
                if (q.is_zero()) continue;
                const GaussianRational s = q.simplex();
                const GaussianRational p = q.perplex();
                r(i, j).set_coeff(k, s);
                r(i, j + cols).set_coeff(k, -p.conj());
                r(i + rows, j).set_coeff(k, p);
                r(i + rows, j + cols).set_coeff(k, s.conj());
            }
    return r;
}

// Study determinant of a quaternion series matrix: det_t of the symplectic
// image. The result is a real series; the imaginary parts are asserted to
// vanish rather than discarded.
inline TruncatedSeries<Rational> sdet_t(const SeriesMatrix<Quaternion>& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("study determinant requires a square matrix");
    const TruncatedSeries<GaussianRational> d = det_t(psi_t(m));
    TruncatedSeries<Rational> out(m.order());
    for (int k = 0; k <= m.order(); ++k) {
        const GaussianRational& c = d.coeff(k);
        if (!c.im().is_zero())
            throw std::logic_error("study determinant produced a non-real coefficient");
        out.set_coeff(k, c.re());
    }
    return out;
}

}  // namespace qzeta
