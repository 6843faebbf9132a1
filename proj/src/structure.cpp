#include "cornerlab/structure.hpp"

#include "cornerlab/linalg.hpp"
#include "cornerlab/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace cornerlab {

namespace {

/// Basis of the column space of m, as the columns of one matrix.
std::optional<Mat> column_space(const Mat& m) {
    RrefResult r = rref(m.transpose());
    if (r.rank == 0) return std::nullopt;
    return r.form.block(0, 0, r.rank, m.rows()).transpose();
}

std::vector<Mat> columns_of(const Mat& m) {
    std::vector<Mat> out;
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
    return out;
}

/// Compression of every basis element to the subspace spanned by the columns of w.
Span restrict_to(const Span& a, const Mat& w) {
    const Mat wh = w.conj_transpose();
    const Mat left = inverse(wh * w) * wh;
    return a.sandwich(left, w);
}

bool is_scalar(const Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i == j ? m(i, i) != m(0, 0) : !m(i, j).is_zero()) return false;
    return true;
}

/// Smallest eigenspace of c over Q(i) (ties to the smaller eigenvalue in
/// (re, im) order); nullopt when c is scalar or has no eigenvalue in Q(i).
std::optional<Mat> smallest_eigenspace(const Mat& c) {
    if (is_scalar(c)) return std::nullopt;
    std::optional<Mat> best;
    const Mat id = Mat::identity(c.rows());
    for (const auto& lambda : rational_eigenvalues(c)) {
        std::vector<Mat> ker = kernel(c - id * lambda);
        if (ker.empty()) throw InternalError("verified eigenvalue with trivial eigenspace");
        if (!best || ker.size() < best->cols()) best = hconcat(ker);
    }
    return best;
}

std::optional<Mat> eigenspace_from(const Span& candidates) {
    for (const auto& c : candidates.basis())
        if (auto w = smallest_eigenspace(c)) return w;
    return std::nullopt;
}

/// Some proper nonzero invariant subspace of the unital algebra a acting on C^d.
Mat some_invariant_subspace(const Span& a) {
    const std::size_t d = a.n();
    Span rad = trace_radical(a);
    if (rad.dim() > 0) {
        if (auto w = column_space(hconcat(rad.basis()))) return *w;
    }
    const Span comm = commutant(a);
    if (auto w = eigenspace_from(a.intersect(comm))) return *w;
    if (auto w = eigenspace_from(comm)) return *w;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Mat> images;
        const Mat e = Mat::unit(d, 1, i, 0);
        for (const auto& b : a.basis()) images.push_back(b * e);
        if (auto w = column_space(hconcat(images)); w && w->cols() < d) return *w;
    }
    throw PreconditionError("no invariant subspace over Q(i); the algebra does not split over the Gaussian rationals");
}

/// Minimal invariant subspace of a unital algebra, or nullopt when irreducible.
std::optional<Mat> minimal_invariant(const Span& a) {
    const std::size_t d = a.n();
    if (a.dim() == d * d) return std::nullopt;
    Mat w = some_invariant_subspace(a);
    if (auto inner = minimal_invariant(restrict_to(a, w))) return w * *inner;
    return w;
}

void require_closed(const Span& s) {
    if (!s.is_square()) throw PreconditionError("expected a square ambient space");
    if (!s.is_mult_closed()) throw PreconditionError("input is not multiplicatively closed");
}

std::size_t block_index(const BlockForm& bf, std::size_t row) {
    std::size_t acc = 0;
    for (std::size_t b = 0; b < bf.blocks(); ++b) {
        acc += bf.block_dims[b];
        if (row < acc) return b;
    }
    throw InternalError("row outside the block structure");
}

/// Block diagonal part of m.
Mat diagonal_part(const BlockForm& bf, const Mat& m) {
    Mat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (block_index(bf, i) == block_index(bf, j)) out(i, j) = m(i, j);
    return out;
}

/// Entries of every basis element at positions whose block distance lies in
/// [0, below), as rows of a (#positions x dim) matrix; kernel = elements vanishing there.
Mat low_distance_map(const BlockForm& bf, const Span& s, std::size_t below) {
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    const std::size_t n = s.n();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t bi = block_index(bf, i), bj = block_index(bf, j);
            if (bj >= bi && bj - bi < below) pos.emplace_back(i, j);
        }
    Mat m(std::max<std::size_t>(pos.size(), 1), std::max<std::size_t>(s.dim(), 1));
    for (std::size_t r = 0; r < pos.size(); ++r)
        for (std::size_t k = 0; k < s.dim(); ++k) m(r, k) = s.basis()[k](pos[r].first, pos[r].second);
    return m;
}

/// Elements of s vanishing at all block distances < below.
Span vanishing_below(const BlockForm& bf, const Span& s, std::size_t below) {
    if (s.dim() == 0) return s;
    std::vector<Mat> gens;
    for (const auto& c : kernel(low_distance_map(bf, s, below))) {
        Mat m(s.n(), s.p());
        for (std::size_t k = 0; k < s.dim(); ++k)
            if (!c(k, 0).is_zero()) m += s.basis()[k] * c(k, 0);
        gens.push_back(std::move(m));
    }
    return Span::from(gens, s.n(), s.p());
}

std::size_t projected_dim(const Span& s, const std::vector<std::pair<std::size_t, std::size_t>>& positions) {
    if (s.dim() == 0 || positions.empty()) return 0;
    Mat m(s.dim(), positions.size());
    for (std::size_t k = 0; k < s.dim(); ++k)
        for (std::size_t c = 0; c < positions.size(); ++c)
            m(k, c) = s.basis()[k](positions[c].first, positions[c].second);
    return rank(m);
}

std::vector<std::pair<std::size_t, std::size_t>> block_positions(const BlockForm& bf, std::size_t bi, std::size_t bj) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < bf.block_dims[bi]; ++i)
        for (std::size_t j = 0; j < bf.block_dims[bj]; ++j) out.emplace_back(bf.offset(bi) + i, bf.offset(bj) + j);
    return out;
}

void fill_derived(BlockForm& bf) {
    bf.block_diagonal = compute_block_diagonal(bf);
    bf.radical = compute_radical(bf);
    bf.linked_partition = linked_partition(bf);
    bf.unhinged = bf.triangularized.contains(bf.block_diagonal);
}

}  // namespace

std::size_t BlockForm::offset(std::size_t i) const {
    return std::accumulate(block_dims.begin(), block_dims.begin() + static_cast<long>(i), std::size_t{0});
}

Mat block_of(const BlockForm& bf, const Mat& m, std::size_t bi, std::size_t bj) {
    return m.block(bf.offset(bi), bf.offset(bj), bf.block_dims[bi], bf.block_dims[bj]);
}

Span trace_radical(const Span& s) {
    if (!s.is_square()) throw PreconditionError("trace radical needs a square ambient space");
    const std::size_t k = s.dim();
    if (k == 0) return s;
    Mat gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = (s.basis()[i] * s.basis()[j]).trace();
    std::vector<Mat> gens;
    for (const auto& c : kernel(gram)) {
        Mat m(s.n(), s.n());
        for (std::size_t i = 0; i < k; ++i)
            if (!c(i, 0).is_zero()) m += s.basis()[i] * c(i, 0);
        gens.push_back(std::move(m));
    }
    return Span::from(gens, s.n(), s.n());
}

Span commutant(const Span& s) {
    if (!s.is_square()) throw PreconditionError("commutant needs a square ambient space");
    const std::size_t d = s.n();
    if (s.dim() == 0) return Span::full(d);
    // Unknown X has entry (i, j) at index i d + j; rows are (Xb - bX)_{ij}.
    Mat sys(s.dim() * d * d, d * d);
    std::size_t row = 0;
    for (const auto& b : s.basis()) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j, ++row) {
                for (std::size_t k = 0; k < d; ++k) {
                    sys(row, i * d + k) += b(k, j);
                    sys(row, k * d + j) -= b(i, k);
                }
            }
    }
    std::vector<Mat> gens;
    for (const auto& v : kernel(sys)) gens.push_back(Mat(d, d, std::vector<GaussianRational>(v.entries().begin(), v.entries().end())));
    return Span::from(gens, d, d);
}

bool is_irreducible(const Span& s) {
    require_closed(s);
    return s.dim() == s.n() * s.n();
}

std::optional<std::vector<Mat>> invariant_subspace(const Span& s) {
    require_closed(s);
    const Span a = s.unitize();
    auto w = minimal_invariant(a);
    if (!w) return std::nullopt;
    return orthogonalize(columns_of(*w));
}

BlockForm triangularize(const Span& s) {
    require_closed(s);
    const std::size_t n = s.n();
    if (!s.contains(Mat::identity(n))) throw PreconditionError("triangularize needs a unital algebra");
    BlockForm bf;
    std::vector<Mat> flag;
    while (flag.size() < n) {
        std::vector<Mat> comp = orthogonal_complement(flag, n);
        const Mat bq = hconcat(comp);
        const Span quotient = flag.empty() ? s : restrict_to(s, bq);
        auto w = minimal_invariant(quotient);
        const Mat lifted = w ? bq * *w : bq;
        std::vector<Mat> all = flag;
        for (const auto& c : columns_of(lifted)) all.push_back(c);
        std::vector<Mat> next = orthogonalize(all);
        if (next.size() <= flag.size()) throw InternalError("composition flag did not grow");
        bf.block_dims.push_back(next.size() - flag.size());
        flag = std::move(next);
    }
    bf.similarity = hconcat(flag);
    bf.triangularized = s.conjugate(bf.similarity);
    for (const auto& m : bf.triangularized.basis())
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (block_index(bf, i) > block_index(bf, j) && !m(i, j).is_zero())
                    throw InternalError("conjugated algebra is not block upper triangular");
    fill_derived(bf);
    return bf;
}

Span compute_block_diagonal(const BlockForm& bf) {
    std::vector<Mat> gens;
    for (const auto& m : bf.triangularized.basis()) gens.push_back(diagonal_part(bf, m));
    const std::size_t n = bf.triangularized.n();
    return Span::from(gens, n, n);
}

Span compute_radical(const BlockForm& bf) { return vanishing_below(bf, bf.triangularized, 1); }

std::vector<std::vector<std::size_t>> linked_partition(const BlockForm& bf) {
    const std::size_t m = bf.blocks();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::size_t> own(m);
    for (std::size_t i = 0; i < m; ++i) own[i] = projected_dim(bf.triangularized, block_positions(bf, i, i));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            auto pos = block_positions(bf, i, i);
            auto pj = block_positions(bf, j, j);
            pos.insert(pos.end(), pj.begin(), pj.end());
            if (projected_dim(bf.triangularized, pos) < own[i] + own[j]) parent[find(j)] = find(i);
        }
    std::vector<std::vector<std::size_t>> groups;
    std::vector<long> slot(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<long>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(slot[root])].push_back(i);
    }
    return groups;
}

BlockForm unhinge(const BlockForm& input) {
    BlockForm bf = input;
    const std::size_t n = bf.triangularized.n();
    const std::size_t m = bf.blocks();
    for (std::size_t dist = 1; dist < m; ++dist) {
        const Span& t = bf.triangularized;
        const Span bd = compute_block_diagonal(bf);
        const Span rad = vanishing_below(bf, t, dist);

        // Unknown entries of N: positions in blocks (i, i + dist).
        std::vector<std::pair<std::size_t, std::size_t>> npos;
        for (std::size_t bi = 0; bi + dist < m; ++bi) {
            auto p = block_positions(bf, bi, bi + dist);
            npos.insert(npos.end(), p.begin(), p.end());
        }
        std::vector<std::vector<long>> at(n, std::vector<long>(n, -1));
        for (std::size_t k = 0; k < npos.size(); ++k) at[npos[k].first][npos[k].second] = static_cast<long>(k);

        // Lift each block diagonal basis element to an element of t.
        Mat diag_map(n * n, t.dim());
        for (std::size_t k = 0; k < t.dim(); ++k) {
            Mat d = diagonal_part(bf, t.basis()[k]);
            for (std::size_t e = 0; e < n * n; ++e) diag_map(e, k) = d.entries()[e];
        }
        const std::size_t nb = bd.dim(), nr = rad.dim();
        const std::size_t unknowns = npos.size() + nb * nr;
        Mat sys(std::max<std::size_t>(nb * npos.size(), 1), std::max<std::size_t>(unknowns, 1));
        Mat rhs(sys.rows(), 1);
        std::size_t row = 0;
        for (std::size_t b = 0; b < nb; ++b) {
            const Mat& d = bd.basis()[b];
            auto coords = solve(diag_map, Mat(n * n, 1, std::vector<GaussianRational>(d.entries().begin(), d.entries().end())));
            if (!coords) throw InternalError("block diagonal element has no lift");
            Mat lift(n, n);
            for (std::size_t k = 0; k < t.dim(); ++k)
                if (!(*coords)(k, 0).is_zero()) lift += t.basis()[k] * (*coords)(k, 0);
            for (const auto& [r, c] : npos) {
                // lift_rc + sum_j y_bj R_j,rc + (d N - N d)_rc = 0
                rhs(row, 0) = -lift(r, c);
                for (std::size_t j = 0; j < nr; ++j) sys(row, npos.size() + b * nr + j) = rad.basis()[j](r, c);
                for (std::size_t k = 0; k < n; ++k) {
                    if (!d(r, k).is_zero() && at[k][c] >= 0) sys(row, static_cast<std::size_t>(at[k][c])) += d(r, k);
                    if (!d(k, c).is_zero() && at[r][k] >= 0) sys(row, static_cast<std::size_t>(at[r][k])) -= d(k, c);
                }
                ++row;
            }
        }
        auto sol = solve(sys, rhs);
        if (!sol) throw InternalError("unhinging round has no solution");
        Mat u = Mat::identity(n);
        for (std::size_t k = 0; k < npos.size(); ++k) u(npos[k].first, npos[k].second) += (*sol)(k, 0);
        bf.similarity = bf.similarity * u;
        bf.triangularized = bf.triangularized.conjugate(u);
    }
    fill_derived(bf);
    if (!bf.unhinged) throw InternalError("block diagonal not contained after unhinging");
    return bf;
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> radical_block_supports(const BlockForm& bf) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
    for (std::size_t i = 0; i < bf.blocks(); ++i)
        for (std::size_t j = i + 1; j < bf.blocks(); ++j)
            out[{i, j}] = projected_dim(bf.radical, block_positions(bf, i, j));
    return out;
}

Mat find_module_projection(const Span& s, Side side) {
    const std::size_t n = s.n(), p = s.p();
    // Left modules absorb M_n from the left; their rows live in a fixed subspace of C^p.
    const std::size_t outer = side == Side::left ? n : p;
    for (std::size_t i = 0; i < outer; ++i)
        for (std::size_t j = 0; j < outer; ++j) {
            const Mat u = Mat::unit(outer, outer, i, j);
            for (const auto& b : s.basis())
                if (!s.contains(side == Side::left ? u * b : b * u))
                    throw PreconditionError("span is not a module on the requested side");
        }
    const std::size_t inner = side == Side::left ? p : n;
    if (s.dim() == 0) return Mat(inner, inner);
    std::vector<Mat> vectors;
    for (const auto& b : s.basis()) {
        if (side == Side::left)
            for (std::size_t i = 0; i < n; ++i) vectors.push_back(b.block(i, 0, 1, p).conj_transpose());
        else
            for (std::size_t j = 0; j < p; ++j) vectors.push_back(b.col(j));
    }
    auto basis = column_space(hconcat(vectors));
    if (!basis) throw InternalError("nonzero module with empty row space");
    Mat q = projection_onto(*basis);
    if (s.dim() != outer * basis->cols()) throw PreconditionError("module dimension does not match its projection");
    return q;
}

}  // namespace cornerlab
