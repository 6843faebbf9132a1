#pragma once

/**
 * @file generators.hpp
 * @brief Constructors for the named algebra families and seeded samplers of
 * exact idempotents, projections, similarities and unitaries.
 */

#include "cornerlab/random.hpp"
#include "cornerlab/span.hpp"

#include <array>
#include <optional>
#include <string>

namespace cornerlab {

bool is_idempotent(const Mat& e);
/// E = E^2 = E^*.
bool is_orthogonal_projection(const Mat& e);

/// Three orthogonal projections summing to I with pairwise zero products.
struct ProjectionTriple {
    Mat q1, q2, q3;

    std::size_t n() const { return q1.rows(); }
    /// Throws std::invalid_argument naming the violated condition.
    void validate() const;
    std::array<std::size_t, 3> ranks() const;
};

/// Q_i = sum of the diagonal units in consecutive blocks of the given ranks.
ProjectionTriple coordinate_triple(std::size_t r1, std::size_t r2, std::size_t r3);
/// U Q_i U^* for the coordinate triple and a seeded Cayley unitary U.
ProjectionTriple random_triple(std::size_t r1, std::size_t r2, std::size_t r3, const SampleConfig& cfg,
                               std::uint64_t index);

/// P M_n Q for orthogonal projections P and Q.
Span lr_algebra(const Mat& p, const Mat& q);

Span family_3_1_1(const ProjectionTriple& t, bool unital);
Span family_3_1_2(const ProjectionTriple& t, bool unital);
Span family_3_1_6(const ProjectionTriple& t, bool unital);
Span family_3_2_2(const ProjectionTriple& t);
Span family_3_2_5(const ProjectionTriple& t);
Span family_3_2_9(const ProjectionTriple& t);

/// Upper triangular n x n matrices.
Span upper_triangular(std::size_t n);

Span canonical_B();
Span canonical_C();
Span canonical_D();
Span B_st(const GaussianRational& s, const GaussianRational& t);
/// Throws std::invalid_argument when r = 0.
Span C_r(const GaussianRational& r);
Span D_rst(const GaussianRational& r, const GaussianRational& s, const GaussianRational& t);

/// Generic elements of the parametric families, in the order (alpha, beta, gamma).
Mat B_st_element(const GaussianRational& s, const GaussianRational& t, const GaussianRational& alpha,
                 const GaussianRational& beta, const GaussianRational& x);
Mat D_rst_element(const GaussianRational& r, const GaussianRational& s, const GaussianRational& t,
                  const GaussianRational& alpha, const GaussianRational& beta, const GaussianRational& gamma);

/// An algebra together with the projection triple it was built from, when any.
struct Family {
    std::string name;
    Span algebra;
    std::optional<ProjectionTriple> triple;
};

/// Family by CLI name ("3.1.1", "B", "Cr", ...); see the README for parameters.
/// Throws std::invalid_argument on unknown names or bad parameters.
Family make_family(const std::string& name, const std::vector<std::string>& params);

/// Rank factorization E = x y with y x = I_r. Conjugating by it turns the
/// corner E A E into the isomorphic r x r span y A x.
struct RankFactors {
    Mat x, y;

    Mat product() const { return x * y; }
};

/// Factors of sample_idempotent (same stream); requires 0 < r < n.
RankFactors sample_idempotent_factors(std::size_t n, std::size_t r, const SampleConfig& cfg, std::uint64_t index);
/// Factors of sample_projection (same stream); requires 0 < r < n.
RankFactors sample_projection_factors(std::size_t n, std::size_t r, const SampleConfig& cfg, std::uint64_t index);

/// E = S diag(I_r, 0) S^{-1} for a seeded random invertible S.
Mat sample_idempotent(std::size_t n, std::size_t r, const SampleConfig& cfg, std::uint64_t index);
/// P = V (V^*V)^{-1} V^* for a seeded random n x r matrix V of full column rank.
Mat sample_projection(std::size_t n, std::size_t r, const SampleConfig& cfg, std::uint64_t index);
/// Orthogonal projection onto the column space of v (full column rank).
Mat projection_from_columns(const Mat& v);
/// Seeded random invertible matrix.
Mat sample_invertible(std::size_t n, const SampleConfig& cfg, std::uint64_t index);
/// Cayley transform (I - K)(I + K)^{-1} of a seeded skew-Hermitian K.
Mat sample_unitary(std::size_t n, const SampleConfig& cfg, std::uint64_t index);

}  // namespace cornerlab
