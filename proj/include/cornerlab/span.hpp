#pragma once

/**
 * @file span.hpp
 * @brief Linear subspaces of n x p matrices held in canonical reduced form.
 *
 * A Span vectorizes its generators row-major, row reduces them and keeps the
 * nonzero rows. Two spans are equal exactly when their canonical bases are,
 * and membership is a single pass of reduction against the pivot rows.
 */

#include "cornerlab/matrix.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cornerlab {

class Span {
public:
    /// The zero subspace of M_{n x p}.
    Span(std::size_t n, std::size_t p);

    /// Canonical basis of the linear span of the generators. All generators
    /// must have shape n x p; throws std::invalid_argument otherwise.
    static Span from(std::span<const Mat> generators, std::size_t n, std::size_t p);
    /// Shape taken from the first generator; throws on an empty list.
    static Span from(std::span<const Mat> generators);
    static Span full(std::size_t n, std::size_t p);
    static Span full(std::size_t n) { return full(n, n); }
    static Span scalars(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t p() const { return p_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_square() const { return n_ == p_; }
    const std::vector<Mat>& basis() const { return basis_; }

    bool contains(const Mat& m) const;
    /// Residual of m after reduction against the basis (zero iff contained).
    Mat reduce(const Mat& m) const;
    /// Coordinates of m with respect to basis(); nullopt when m is outside.
    std::optional<std::vector<GaussianRational>> coordinates(const Mat& m) const;
    bool contains(const Span& other) const;

    bool is_mult_closed() const;
    /// First pair (i, j) of basis indices whose product escapes the span.
    std::optional<std::pair<std::size_t, std::size_t>> escaping_product() const;
    Span closure() const;

    /// Canonical span of {e A e : A in basis}. e is not checked for idempotency.
    Span compress(const Mat& e) const;
    /// Span of {left A right}; shapes must conform.
    Span sandwich(const Mat& left, const Mat& right) const;
    Span unitize() const;
    Span transpose() const;
    Span anti_transpose() const;
    /// S^{-1} A S for every element.
    Span conjugate(const Mat& s) const;
    Span conjugate(const Mat& s, const Mat& s_inverse) const;
    Span operator+(const Span& other) const;
    Span intersect(const Span& other) const;

    friend bool operator==(const Span& a, const Span& b) {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.basis_ == b.basis_;
    }

private:
    Span(std::size_t n, std::size_t p, std::vector<Mat> basis, std::vector<std::size_t> pivots);
    void require_square(const char* op) const;

    std::size_t n_;
    std::size_t p_;
    std::vector<Mat> basis_;          // rref rows, unvectorized
    std::vector<std::size_t> pivots_;  // pivot position (row-major index) per basis element
};

inline Span span_from(std::span<const Mat> generators) { return Span::from(generators); }
inline Span span_transpose(const Span& s) { return s.transpose(); }
inline Span span_anti_transpose(const Span& s) { return s.anti_transpose(); }

}  // namespace cornerlab
