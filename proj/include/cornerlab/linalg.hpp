#pragma once

/**
 * @file linalg.hpp
 * @brief Exact elimination kernels: rref, rank, solve, kernel, det, inverse.
 *
 * Pivoting is fixed (leftmost column, first nonzero row) so every derived
 * basis is deterministic.
 */

#include "cornerlab/matrix.hpp"

#include <optional>
#include <vector>

namespace cornerlab {

struct RrefResult {
    Mat form;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref(const Mat& a);
std::size_t rank(const Mat& a);

/// One solution of a x = b with free variables set to zero, or nullopt when
/// the system is inconsistent. Throws on a.rows() != b.rows().
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Columns spanning the right null space of a (a cols x k matrix), in the
/// canonical order given by the free columns of rref(a). Empty when k = 0.
std::vector<Mat> kernel(const Mat& a);

GaussianRational det(const Mat& a);
/// Throws std::domain_error on singular input.
Mat inverse(const Mat& a);

/// Orthogonal projection onto the column space of v: V (V*V)^{-1} V*.
/// Requires v to have full column rank.
Mat projection_onto(const Mat& v);

/// Unnormalized Gram-Schmidt on the columns of v, dropping dependent ones.
/// The result has mutually orthogonal columns spanning the same space.
std::vector<Mat> orthogonalize(const std::vector<Mat>& columns);

/// Columns of the orthogonal complement of span(columns) in C^n, orthogonal.
std::vector<Mat> orthogonal_complement(const std::vector<Mat>& columns, std::size_t n);

}  // namespace cornerlab
