#include "doctest.h"

#include "cornerlab/generators.hpp"
#include "cornerlab/linalg.hpp"

using namespace cornerlab;
using G = GaussianRational;

namespace {
Mat E(std::size_t i, std::size_t j) { return Mat::unit(3, 3, i - 1, j - 1); }
}  // namespace

TEST_CASE("coordinate triple families in M_3") {
    const ProjectionTriple t = coordinate_triple(1, 1, 1);
    CHECK(family_3_1_1(t, true) == upper_triangular(3));
    CHECK(family_3_1_1(t, false).dim() == 5);
    CHECK(family_3_1_2(t, true).dim() == 5);
    CHECK(family_3_1_2(t, false).dim() == 4);
    CHECK(family_3_1_6(t, false).dim() == 4);
    CHECK(family_3_1_6(t, true).dim() == 5);
    CHECK(family_3_2_2(t).dim() == 4);
    CHECK(family_3_2_5(t).dim() == 4);
    CHECK(family_3_2_9(t).dim() == 4);
    // Frozen against a direct membership check of I in the basis.
    CHECK(family_3_2_2(t).contains(Mat::identity(3)));
    CHECK(family_3_2_5(t).contains(Mat::identity(3)));
    const Span strict = Span::from(std::vector<Mat>{E(1, 2), E(1, 3), E(2, 3)}, 3, 3);
    CHECK(family_3_2_9(t).intersect(strict).dim() == 3);
    for (const Span& s : {family_3_1_1(t, true), family_3_1_2(t, false), family_3_1_6(t, true), family_3_2_2(t),
                          family_3_2_5(t), family_3_2_9(t)})
        CHECK(s.is_mult_closed());
}

TEST_CASE("LR algebras") {
    const ProjectionTriple t = coordinate_triple(1, 1, 1);
    CHECK(lr_algebra(t.q3, t.q3) == Span::from(std::vector<Mat>{t.q3}, 3, 3));
    CHECK(lr_algebra(Mat::identity(3), Mat::identity(3)) == Span::full(3));
    CHECK(lr_algebra(t.q1 + t.q2, t.q2 + t.q3).dim() == 4);
    CHECK_THROWS(lr_algebra(Mat{{1, 1}, {0, 0}}, Mat::identity(2)));
}

TEST_CASE("canonical forms") {
    const Span b00 = B_st(0, 0);
    CHECK(b00 == Span::from(std::vector<Mat>{E(1, 1) + E(3, 3), E(2, 2), E(1, 3)}, 3, 3));
    // Swapping e2 and e3 carries the canonical B onto B_00.
    const Mat swap23{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    CHECK(canonical_B().conjugate(swap23) == b00);
    CHECK(C_r(1) == Span::from(std::vector<Mat>{Mat::identity(3), E(1, 3), E(1, 2) + E(2, 3)}, 3, 3));
    CHECK(canonical_D().dim() == 3);
    CHECK(canonical_D().contains(E(2, 2)));
    CHECK_THROWS(C_r(0));
    for (const Span& s : {B_st(2, G::parse("1/3+i")), C_r(-2), D_rst(1, 2, 3)}) {
        CHECK(s.dim() == 3);
        CHECK(s.contains(Mat::identity(3)));
        CHECK(s.is_mult_closed());
    }
}

TEST_CASE("samplers") {
    SampleConfig cfg;
    cfg.seed = 42;
    const Mat e = sample_idempotent(3, 2, cfg, 0);
    CHECK(e == sample_idempotent(3, 2, cfg, 0));
    CHECK(e * e == e);
    CHECK(rank(e) == 2);
    CHECK(sample_idempotent(3, 0, cfg, 0).is_zero());
    CHECK(sample_idempotent(3, 3, cfg, 0) == Mat::identity(3));
    CHECK(sample_projection(3, 3, cfg, 0) == Mat::identity(3));
    const Mat p = sample_projection(4, 2, cfg, 5);
    CHECK(is_orthogonal_projection(p));
    CHECK(rank(p) == 2);
    const RankFactors f = sample_idempotent_factors(4, 2, cfg, 7);
    CHECK(f.y * f.x == Mat::identity(2));
    CHECK(f.product() == sample_idempotent(4, 2, cfg, 7));
    const Mat u = sample_unitary(3, cfg, 1);
    CHECK(u * u.conj_transpose() == Mat::identity(3));
    cfg.seed = 43;
    CHECK(sample_idempotent(3, 2, cfg, 0) != e);
}

TEST_CASE("random triples are valid") {
    SampleConfig cfg;
    for (std::uint64_t i = 0; i < 5; ++i) {
        const ProjectionTriple t = random_triple(1, 1, 2, cfg, i);
        CHECK_NOTHROW(t.validate());
        CHECK(t.ranks() == std::array<std::size_t, 3>{1, 1, 2});
    }
}

TEST_CASE("family registry") {
    CHECK(make_family("3.1.1", {"4", "unital"}).algebra.n() == 4);
    CHECK(make_family("T3", {}).algebra == upper_triangular(3));
    CHECK(make_family("Bst", {"0", "0"}).algebra == B_st(0, 0));
    CHECK(make_family("LR", {"110", "011", "unital"}).algebra.dim() == 5);
    CHECK(make_family("scalar", {"2"}).algebra == Span::scalars(2));
    CHECK_THROWS_AS(make_family("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(make_family("Cr", {"0"}), std::invalid_argument);
    CHECK_THROWS_AS(make_family("B", {"1"}), std::invalid_argument);
}
