#include "doctest.h"

#include "cornerlab/compress.hpp"

using namespace cornerlab;
using G = GaussianRational;

TEST_CASE("counterexample projection in M_3") {
    const Section2Report rep = repro_section2();
    CHECK(rep.square == Mat{{42, -39, -3}, {-39, 42, -3}, {-3, -3, 6}});
    CHECK(rep.square(0, 0) == 42);
    CHECK(rep.relation_on_corner);
    CHECK(rep.generator(1, 1) + G(5) * rep.generator(1, 2) == 0);
    CHECK_FALSE(rep.square_relation.is_zero());
    CHECK_FALSE(rep.square_in_corner);
    CHECK_FALSE(rep.projection_compressible);
    CHECK(rep.verified);
}

TEST_CASE("compressor checks") {
    const Mat p{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
    CHECK(idempotent_scale(p) == G(3));
    CHECK_NOTHROW(check_compressor(p, Mode::projection));
    const Mat e{{1, 1}, {0, 0}};
    CHECK_NOTHROW(check_compressor(e, Mode::idempotent));
    CHECK_THROWS_AS(check_compressor(e, Mode::projection), PreconditionError);
    CHECK_THROWS_AS(check_compressor(Mat{{0, 1}, {0, 0}}, Mode::idempotent), PreconditionError);
    CHECK(parse_mode("idempotent") == Mode::idempotent);
    CHECK_THROWS_AS(parse_mode("other"), PreconditionError);
}

TEST_CASE("corner_is_algebra") {
    const Span a = Span::from(std::vector<Mat>{Mat{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}}, 3, 3);
    CHECK_FALSE(corner_is_algebra(a, Mat{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, Mode::projection));
    CHECK(corner_is_algebra(canonical_B(), Mat::identity(3), Mode::projection));
    SampleConfig cfg;
    for (std::uint64_t i = 0; i < 20; ++i)
        CHECK(corner_is_algebra(upper_triangular(3), sample_idempotent(3, 2, cfg, i), Mode::idempotent));
}

TEST_CASE("falsify") {
    SampleConfig cfg;
    const CornerReport d = falsify(canonical_D(), Mode::projection, cfg);
    REQUIRE(d.verdict == CornerReport::Verdict::counterexample);
    CHECK_FALSE(corner_is_algebra(canonical_D(), *d.witness_e, Mode::projection));
    CHECK_FALSE(canonical_D().compress(*d.witness_e).contains(*d.witness_product));
    CHECK(falsify(Span::full(3), Mode::idempotent, cfg).verdict == CornerReport::Verdict::no_counterexample_found);
    const CornerReport f = falsify(family_3_2_9(coordinate_triple(1, 1, 1)), Mode::idempotent, cfg);
    CHECK(f.verdict == CornerReport::Verdict::no_counterexample_found);
    CHECK(f.samples_used == 200);
}

TEST_CASE("class B certificate") {
    const CertificateB c = certify_B(0, 0, 1);
    CHECK(c.verified);
    CHECK_FALSE(c.member);
    CHECK(c.identity_rhs == 3);
    CHECK(c.identity_lhs == c.identity_rhs);
    CHECK(c.projection_scale == 3);
    const CertificateB d = certify_B(2, 3, 1);
    CHECK(d.identity_rhs == 6);
    CHECK(d.verified);
    CHECK_THROWS_AS(certify_B(1, 0, 1), PreconditionError);
    CHECK_THROWS_AS(certify_B(0, 0, G::i()), PreconditionError);
    CHECK(default_k_for_B(1, 2) == 3);
}

TEST_CASE("class C certificate") {
    CHECK(certify_C(1).identity_rhs == 3);
    CHECK(certify_C(1).verified);
    CHECK(certify_C(-2).identity_rhs == -6);
    CHECK(certify_C(G::parse("1/2+i")).verified);
    CHECK_THROWS_AS(certify_C(0), PreconditionError);
}

TEST_CASE("class D certificate") {
    auto grand = [](G r, G s, G t, G k, G m) {
        return k * m * (k * k + m * m + 1) * (r * m - 1) * (s * k + m + r) * (k - (r * t + s) * m + t);
    };
    const CertificateD c = certify_D(0, 0, 0, 1, 1);
    CHECK(c.verified);
    CHECK(c.identity_rhs == -3);
    const CertificateD d = certify_D(1, 2, 3, 1, 2);
    CHECK(d.identity_rhs == grand(1, 2, 3, 1, 2));
    CHECK(d.verified);
    const G r = G::parse("2/3-i"), s = G::parse("i"), t = G::parse("-5/2");
    auto km = default_km_for_D(r, s, t);
    REQUIRE(km);
    const CertificateD e = certify_D(r, s, t, km->first, km->second);
    CHECK(e.verified);
    CHECK(e.identity_rhs == grand(r, s, t, km->first, km->second));
    CHECK_THROWS_AS(certify_D(1, 0, 0, 1, 1), PreconditionError);
    CHECK(certify_D_violations(1, 0, 0, 1, 1) == std::vector<std::string>{"rm = 1"});
}

TEST_CASE("hypothesis checks") {
    const Family f = make_family("3.2.5", {});
    CHECK(lemma_precondition_check(f, Mat::identity(3), Hypothesis::eq1_fixed));
    CHECK(lemma_precondition_check(f, Mat::identity(3), Hypothesis::eq2e_membership) ==
          f.algebra.contains(f.triple->q2));
    CHECK_THROWS_AS(lemma_precondition_check(make_family("B", {}), Mat::identity(3), Hypothesis::eq1_fixed),
                    PreconditionError);
}
