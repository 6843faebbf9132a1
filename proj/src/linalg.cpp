#include "cornerlab/linalg.hpp"

#include <stdexcept>

namespace cornerlab {

namespace {

void eliminate_row(Mat& m, std::size_t target, std::size_t source, const GaussianRational& factor,
                   std::size_t from_col) {
    for (std::size_t j = from_col; j < m.cols(); ++j) {
        const GaussianRational& s = m(source, j);
        if (!s.is_zero()) m(target, j) -= factor * s;
    }
}

}  // namespace

RrefResult rref(const Mat& a) {
    RrefResult out{a, {}, 0};
    Mat& m = out.form;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
        if (!m(row, col).is_one()) {
            GaussianRational inv = m(row, col).inverse();
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(row, j) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            GaussianRational f = m(r, col);
            eliminate_row(m, r, row, f, col);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

std::size_t rank(const Mat& a) { return rref(a).rank; }

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    const std::size_t n = a.cols();
    std::vector<Mat> parts{a, b};
    RrefResult r = rref(hconcat(parts));
    Mat x(n, b.cols());
    for (std::size_t k = 0; k < r.rank; ++k) {
        std::size_t pc = r.pivots[k];
        if (pc >= n) return std::nullopt;  // pivot in the augmented part
        for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = r.form(k, n + j);
    }
    return x;
}

std::vector<Mat> kernel(const Mat& a) {
    RrefResult r = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Mat> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Mat v(n, 1);
        v(free, 0) = 1;
        for (std::size_t k = 0; k < r.rank; ++k) v(r.pivots[k], 0) = -r.form(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

GaussianRational det(const Mat& a) {
    if (!a.is_square()) throw std::invalid_argument("det of non-square matrix");
    Mat m = a;
    const std::size_t n = m.rows();
    GaussianRational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return GaussianRational();
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        GaussianRational inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            GaussianRational f = m(r, col) * inv;
            eliminate_row(m, r, col, f, col);
        }
    }
    return d;
}

Mat inverse(const Mat& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Mat> parts{a, Mat::identity(n)};
    RrefResult r = rref(hconcat(parts));
    if (r.rank < n || r.pivots[n - 1] != n - 1) throw std::domain_error("inverse of singular matrix");
    return r.form.block(0, n, n, n);
}

Mat projection_onto(const Mat& v) {
    Mat vh = v.conj_transpose();
    return v * inverse(vh * v) * vh;
}

std::vector<Mat> orthogonalize(const std::vector<Mat>& columns) {
    std::vector<Mat> out;
    std::vector<GaussianRational> norms;
    for (const auto& c : columns) {
        Mat w = c;
        for (std::size_t k = 0; k < out.size(); ++k) {
            GaussianRational ip = (out[k].conj_transpose() * c)(0, 0);
            if (!ip.is_zero()) w -= out[k] * (ip / norms[k]);
        }
        if (w.is_zero()) continue;
        norms.push_back((w.conj_transpose() * w)(0, 0));
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Mat> orthogonal_complement(const std::vector<Mat>& columns, std::size_t n) {
    if (columns.empty()) {
        std::vector<Mat> all;
        for (std::size_t i = 0; i < n; ++i) all.push_back(Mat::unit(n, 1, i, 0));
        return all;
    }
    // v is orthogonal to every column c iff c^* v = 0.
    Mat rows(columns.size(), n);
    for (std::size_t k = 0; k < columns.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) rows(k, i) = columns[k](i, 0).conj();
    return orthogonalize(kernel(rows));
}

}  // namespace cornerlab
