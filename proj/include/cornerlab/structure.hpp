#pragma once

/**
 * @file structure.hpp
 * @brief Block upper triangular forms of matrix algebras: invariant
 * subspaces, composition flags, block diagonal, radical, linked blocks and
 * unhinging similarities.
 *
 * Invariant subspaces are found exactly. A nonzero radical (the kernel of
 * the trace form) gives one directly; otherwise an eigenspace of a central
 * or commuting element does. Eigenvalues are located numerically and kept
 * only if they verify exactly, so algebras that only split over an extension
 * of Q(i) are rejected with a PreconditionError.
 */

#include "cornerlab/errors.hpp"
#include "cornerlab/span.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cornerlab {

struct BlockForm {
    Mat similarity = Mat(1, 1);  ///< columns form the adapted (orthogonal) basis
    std::vector<std::size_t> block_dims;
    Span triangularized{1, 1};  ///< similarity^{-1} A similarity
    Span block_diagonal{1, 1};
    Span radical{1, 1};
    /// Groups of 0-based block indices, each sorted, ordered by first element.
    std::vector<std::vector<std::size_t>> linked_partition;
    bool unhinged = false;

    std::size_t blocks() const { return block_dims.size(); }
    /// First row/column of block i.
    std::size_t offset(std::size_t i) const;
};

/// Radical of a matrix algebra: elements x with tr(xy) = 0 for all y in s.
Span trace_radical(const Span& s);
/// Matrices commuting with every element of s.
Span commutant(const Span& s);

/// Throws PreconditionError when s is not multiplicatively closed.
bool is_irreducible(const Span& s);

/// Orthogonal basis (as columns) of a minimal proper nonzero invariant
/// subspace of the unitization of s, or nullopt when s is irreducible.
std::optional<std::vector<Mat>> invariant_subspace(const Span& s);

/// Reduced block upper triangular form along a composition flag. Requires a
/// unital, multiplicatively closed square span.
BlockForm triangularize(const Span& s);

/// Elements of bf.triangularized whose diagonal blocks vanish.
Span compute_radical(const BlockForm& bf);
/// Span of the block diagonal parts of bf.triangularized.
Span compute_block_diagonal(const BlockForm& bf);

/// i ~ j when the joint projection onto blocks (i, i) and (j, j) has smaller
/// dimension than the two projections separately; transitively closed.
std::vector<std::vector<std::size_t>> linked_partition(const BlockForm& bf);

/// Conjugates by a block unipotent similarity until the block diagonal lies
/// inside the algebra. Throws InternalError if a correction round fails.
BlockForm unhinge(const BlockForm& bf);

/// Dimension of Q_i Rad Q_j for every block pair i < j (0-based keys).
std::map<std::pair<std::size_t, std::size_t>, std::size_t> radical_block_supports(const BlockForm& bf);

enum class Side { left, right };

/// Orthogonal projection Q with s = M_{n x p} Q (left) or s = Q M_{n x p}
/// (right). Throws PreconditionError if s is not a module on that side.
Mat find_module_projection(const Span& s, Side side);

/// Block of m occupying block rows of bi and block columns of bj.
Mat block_of(const BlockForm& bf, const Mat& m, std::size_t bi, std::size_t bj);

}  // namespace cornerlab
