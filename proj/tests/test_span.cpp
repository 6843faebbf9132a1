#include "doctest.h"

#include "cornerlab/generators.hpp"
#include "cornerlab/linalg.hpp"

using namespace cornerlab;
using G = GaussianRational;

namespace {
Mat E(std::size_t i, std::size_t j) { return Mat::unit(3, 3, i - 1, j - 1); }
Span span_of(std::vector<Mat> gens) { return Span::from(gens, gens.front().rows(), gens.front().cols()); }
const Mat kP{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
const Mat kQ12{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}};
}  // namespace

TEST_CASE("span dimensions") {
    CHECK(span_of({Mat::identity(3), Mat::identity(3) * G(2)}).dim() == 1);
    CHECK(span_of({E(1, 1) + E(2, 2), E(1, 2), E(3, 3)}).dim() == 3);
    CHECK(span_of({Mat(3, 3)}).dim() == 0);
    CHECK(Span::full(3).dim() == 9);
}

TEST_CASE("membership") {
    const Span s = Span::scalars(3);
    CHECK(s.contains(Mat::identity(3) * G(5)));
    CHECK(s.contains(Mat(3, 3)));
    CHECK_FALSE(s.contains(E(1, 2)));
    const Span b = canonical_B();
    auto coords = b.coordinates(E(1, 1) + E(2, 2) + E(1, 2) * G(3));
    REQUIRE(coords);
    Mat rebuilt(3, 3);
    for (std::size_t k = 0; k < coords->size(); ++k) rebuilt += b.basis()[k] * (*coords)[k];
    CHECK(rebuilt == E(1, 1) + E(2, 2) + E(1, 2) * G(3));
}

TEST_CASE("multiplicative closure") {
    CHECK(Span::full(3).is_mult_closed());
    const Span s = span_of({E(1, 2), E(2, 3)});
    CHECK_FALSE(s.is_mult_closed());
    const Span cl = s.closure();
    CHECK(cl == span_of({E(1, 2), E(2, 3), E(1, 3)}));
    const Mat jordan{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    CHECK(span_of({jordan, Mat::identity(3)}).closure().dim() == 3);
    CHECK(Span::full(3).closure() == Span::full(3));
}

TEST_CASE("corner of the two-projection algebra") {
    const Span a = span_of({kQ12});
    const Span corner = a.compress(kP);
    CHECK_FALSE(corner.is_mult_closed());
    const Mat pbp = kP * kQ12 * kP;
    CHECK_FALSE(corner.contains(pbp * pbp));
    CHECK(rank(kP) == 2);
    CHECK(det(kP).is_zero());
}

TEST_CASE("compression by a rank-two idempotent of M_3") {
    SampleConfig cfg;
    const Mat e = sample_idempotent(3, 2, cfg, 0);
    const Span c = Span::full(3).compress(e);
    CHECK(c.dim() == 4);
    CHECK(c.is_mult_closed());
}

TEST_CASE("unitize, transpose, anti-transpose") {
    const Span q3 = span_of({E(3, 3)});
    CHECK(q3.unitize().dim() == 2);
    CHECK(span_of({Mat(3, 3)}).unitize() == Span::scalars(3));
    const Span t3 = upper_triangular(3);
    const Span lower = t3.transpose();
    CHECK(lower.dim() == 6);
    CHECK(lower.contains(E(3, 1)));
    CHECK_FALSE(lower.contains(E(1, 3)));
    CHECK(t3.anti_transpose() == t3);
    CHECK(Span::scalars(3).transpose() == Span::scalars(3));
    CHECK(E(1, 2).anti_transpose() == E(2, 3));
    CHECK(Mat::diagonal(std::vector<G>{1, 2, 3}) == Mat::diagonal(std::vector<G>{3, 2, 1}).anti_transpose());
}

TEST_CASE("sums, intersections and conjugation") {
    const Span a = span_of({E(1, 1), E(1, 2)}), b = span_of({E(1, 2), E(2, 2)});
    CHECK((a + b).dim() == 3);
    CHECK(a.intersect(b) == span_of({E(1, 2)}));
    const Mat s = Mat::identity(3) + E(1, 2);
    CHECK(inverse(s) == Mat::identity(3) - E(1, 2));
    CHECK(upper_triangular(3).conjugate(s) == upper_triangular(3));
}

TEST_CASE("rank-one matrices") {
    const std::vector<G> e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1}, v{0, 1, G::i()};
    CHECK(rank_one(e1, e1) == E(1, 1));
    CHECK(rank_one(e1, e3) == E(1, 3));
    CHECK(rank_one(e2, v) == E(2, 2) - E(2, 3) * G::i());
}
