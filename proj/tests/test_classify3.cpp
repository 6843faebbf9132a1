#include "doctest.h"

#include "cornerlab/classify3.hpp"

using namespace cornerlab;

TEST_CASE("labels of the representatives") {
    const ProjectionTriple t = coordinate_triple(1, 1, 1);
    CHECK(classify(Span::full(3)).tag == ClassTag::FULL);
    CHECK(classify(Span::full(3)).compressible);
    CHECK(classify(canonical_D()).tag == ClassTag::CLASS_D);
    CHECK_FALSE(classify(canonical_D()).compressible);
    CHECK(classify(canonical_B()).tag == ClassTag::CLASS_B);
    CHECK(classify(upper_triangular(3)).tag == ClassTag::EX_3_1_1);
    CHECK(classify(family_3_1_2(t, true)).tag == ClassTag::EX_3_1_2);
    CHECK(classify(family_3_1_6(t, true)).tag == ClassTag::EX_3_1_6);
    CHECK(classify(family_3_2_2(t)).tag == ClassTag::EX_3_2_2);
    CHECK(classify(family_3_2_5(t)).tag == ClassTag::EX_3_2_5);
    CHECK(classify(family_3_2_9(t)).tag == ClassTag::EX_3_2_9);
    CHECK(classify(family_3_2_9(t)).compressible);
    CHECK(classify(lr_algebra(t.q1 + t.q2, t.q2 + t.q3).unitize()).tag == ClassTag::UNITIZED_LR);
    CHECK(classify(Span::scalars(3)).tag == ClassTag::SCALAR);
}

TEST_CASE("parametric families keep their class") {
    SampleConfig cfg;
    for (std::uint64_t i = 0; i < 5; ++i) {
        const Mat s = sample_invertible(3, cfg, i);
        CHECK(classify(C_r(2).conjugate(s)).tag == ClassTag::CLASS_C);
        CHECK(classify(B_st(GaussianRational::parse("1/2"), 3).conjugate(s)).tag == ClassTag::CLASS_B);
        CHECK(classify(D_rst(1, 2, GaussianRational::parse("-i")).conjugate(s)).tag == ClassTag::CLASS_D);
    }
}

TEST_CASE("anti-transposed normalization is recorded") {
    const ProjectionTriple t = coordinate_triple(1, 1, 1);
    const Span a = family_3_1_6(t, true);
    const ClassLabel l = classify(a), m = classify(a.anti_transpose());
    CHECK(l.tag == m.tag);
    CHECK(l.transposed != m.transposed);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(classify(Span::full(4)), PreconditionError);
    CHECK_THROWS_AS(classify(canonical_B().intersect(Span::from(std::vector<Mat>{Mat::unit(3, 3, 0, 1)}, 3, 3))),
                    PreconditionError);
    CHECK_THROWS_AS(classify(Span::from(std::vector<Mat>{Mat::unit(3, 3, 0, 1), Mat::identity(3)}, 3, 3) +
                             Span::from(std::vector<Mat>{Mat::unit(3, 3, 1, 0)}, 3, 3)),
                    PreconditionError);
}

TEST_CASE("cross validation") {
    SampleConfig cfg;
    const CrossValidation c = cross_validate(canonical_C(), cfg);
    CHECK_FALSE(c.label.compressible);
    CHECK(c.projection.verdict == CornerReport::Verdict::counterexample);
    CHECK(c.consistent);
    const CrossValidation t = cross_validate(upper_triangular(3), cfg);
    CHECK(t.label.compressible);
    CHECK(t.projection.verdict == CornerReport::Verdict::no_counterexample_found);
    CHECK(t.idempotent.verdict == CornerReport::Verdict::no_counterexample_found);
    CHECK(t.consistent);
    const ProjectionTriple q = coordinate_triple(1, 1, 1);
    const CrossValidation u = cross_validate(lr_algebra(q.q1 + q.q2, q.q2 + q.q3).unitize(), cfg);
    CHECK(u.label.tag == ClassTag::UNITIZED_LR);
    CHECK(u.consistent);
}
