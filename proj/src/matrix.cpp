#include "cornerlab/matrix.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace cornerlab {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    require(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
    require(data_.size() == rows * cols, "entry count does not match shape");
}

Mat::Mat(std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    require(rows_ >= 1 && cols_ >= 1, "matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Mat m(rows, cols);
    m(i, j) = 1;
    return m;
}

Mat Mat::diagonal(std::span<const GaussianRational> d) {
    Mat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Mat Mat::flip(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
    return m;
}

Mat Mat::column(std::span<const GaussianRational> v) {
    return Mat(v.size(), 1, std::vector<GaussianRational>(v.begin(), v.end()));
}

bool Mat::is_zero() const {
    for (const auto& z : data_)
        if (!z.is_zero()) return false;
    return true;
}

GaussianRational Mat::trace() const {
    require(is_square(), "trace of non-square matrix");
    GaussianRational t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::conj_transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
    return t;
}

Mat Mat::anti_transpose() const {
    require(is_square(), "anti-transpose of non-square matrix");
    const std::size_t n = rows_;
    Mat t(n, n);
    // (J A^T J)_ij = A_{n-1-j, n-1-i}
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) = (*this)(n - 1 - j, n - 1 - i);
    return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
    Mat b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

Mat& Mat::operator+=(const Mat& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in addition");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Mat& Mat::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        for (auto& z : data_) z = GaussianRational();
        return *this;
    }
    if (s.is_one()) return *this;
    for (auto& z : data_)
        if (!z.is_zero()) z *= s;
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    require(a.cols_ == b.rows_, "dimension mismatch in product");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const GaussianRational& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                c(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

Mat rank_one(std::span<const GaussianRational> x, std::span<const GaussianRational> y) {
    require(x.size() == y.size() && !x.empty(), "rank_one: vector length mismatch");
    Mat m(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j].conj();
    return m;
}

Mat hconcat(std::span<const Mat> blocks) {
    require(!blocks.empty(), "hconcat of nothing");
    std::size_t rows = blocks.front().rows(), cols = 0;
    for (const auto& b : blocks) {
        require(b.rows() == rows, "hconcat row mismatch");
        cols += b.cols();
    }
    Mat out(rows, cols);
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, c0 + j) = b(i, j);
        c0 += b.cols();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

}  // namespace cornerlab
