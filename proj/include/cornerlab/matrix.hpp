#pragma once

/**
 * @file matrix.hpp
 * @brief Dense row-major matrices over the Gaussian rationals.
 *
 * Mat is a plain value type. Shapes are checked on every binary operation
 * and mismatches throw std::invalid_argument; nothing is ever rounded.
 */

#include "cornerlab/gaussian_rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace cornerlab {

class Mat {
public:
    /// rows x cols zero matrix; both must be >= 1.
    Mat(std::size_t rows, std::size_t cols);
    Mat(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
    /// Row-list literal, e.g. Mat{{1, 2}, {3, 4}}.
    Mat(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    /// Matrix unit E_ij (0-based) of the given shape.
    static Mat unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
    static Mat diagonal(std::span<const GaussianRational> d);
    /// The flip permutation J with J_ij = 1 iff i + j = n - 1.
    static Mat flip(std::size_t n);
    static Mat column(std::span<const GaussianRational> v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const GaussianRational> entries() const { return data_; }
    std::span<GaussianRational> entries() { return data_; }

    bool is_zero() const;
    GaussianRational trace() const;

    Mat transpose() const;
    Mat conj_transpose() const;
    /// Reflection about the anti-diagonal, J A^T J. Throws on non-square input.
    Mat anti_transpose() const;

    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Mat col(std::size_t j) const { return block(0, j, rows_, 1); }

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const GaussianRational& s);

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, const GaussianRational& s) { return a *= s; }
    friend Mat operator*(const GaussianRational& s, Mat a) { return a *= s; }
    friend Mat operator-(Mat a) { return a *= GaussianRational(-1); }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<GaussianRational> data_;
};

/// Exact product; throws std::invalid_argument when a.cols() != b.rows().
inline Mat mat_mul(const Mat& a, const Mat& b) { return a * b; }

/// Rank-one matrix x y^* (the map z -> <z, y> x). Vectors are given as columns
/// or as spans of entries.
Mat rank_one(std::span<const GaussianRational> x, std::span<const GaussianRational> y);

/// Horizontal concatenation of column blocks with equal row counts.
Mat hconcat(std::span<const Mat> blocks);

std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace cornerlab
