#pragma once

#include <stdexcept>
#include <vector>

namespace qzeta {

// Minimal dense matrix container for constant (non-series) entries.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols)
        : rows_(checked(rows)), cols_(checked(cols)),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_.at(index(i, j)); }
    const T& operator()(int i, int j) const { return a_.at(index(i, j)); }

    Mat operator-() const {
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
        return r;
    }

    Mat& operator+=(const Mat& o) {
        require_same_shape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        require_same_shape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b(k, j).is_zero()) continue;
                    r(i, j) += aik * b(k, j);
                }
            }
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

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
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

}  // namespace qzeta
