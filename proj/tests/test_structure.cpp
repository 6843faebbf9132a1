#include "doctest.h"

#include "cornerlab/generators.hpp"
#include "cornerlab/linalg.hpp"
#include "cornerlab/structure.hpp"

using namespace cornerlab;

namespace {
using Supports = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

bool spans_e1(const std::vector<Mat>& cols) {
    return cols.size() == 1 && !cols[0](0, 0).is_zero() && cols[0](1, 0).is_zero() && cols[0](2, 0).is_zero();
}
}  // namespace

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(Span::full(3)));
    CHECK_FALSE(is_irreducible(upper_triangular(3)));
    CHECK_FALSE(is_irreducible(Span::scalars(2)));
    CHECK_THROWS_AS(is_irreducible(Span::from(std::vector<Mat>{Mat::unit(3, 3, 0, 1), Mat::unit(3, 3, 1, 2)}, 3, 3)),
                    PreconditionError);
}

TEST_CASE("invariant subspaces") {
    auto t3 = invariant_subspace(upper_triangular(3));
    REQUIRE(t3);
    CHECK(spans_e1(*t3));
    const Mat jordan{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    auto j = invariant_subspace(Span::from(std::vector<Mat>{jordan, Mat::identity(3)}, 3, 3).closure());
    REQUIRE(j);
    CHECK(spans_e1(*j));
    CHECK_FALSE(invariant_subspace(Span::full(3)));
}

TEST_CASE("triangularize") {
    CHECK(triangularize(Span::full(3)).block_dims == std::vector<std::size_t>{3});
    const BlockForm d = triangularize(canonical_D());
    CHECK(d.block_dims == std::vector<std::size_t>{1, 1, 1});
    CHECK(d.radical.dim() == 0);
    SampleConfig cfg;
    const BlockForm t = triangularize(upper_triangular(3).conjugate(sample_invertible(3, cfg, 3)));
    CHECK(t.block_dims == std::vector<std::size_t>{1, 1, 1});
    CHECK(t.radical.dim() == 3);
    CHECK(triangularize(make_family("3.1.2", {"4", "unital"}).algebra).block_dims.size() == 4);
    CHECK_THROWS_AS(triangularize(canonical_B().intersect(Span::from(std::vector<Mat>{Mat::unit(3, 3, 0, 1)}, 3, 3))),
                    PreconditionError);
}

TEST_CASE("radical, linked partition and supports of the canonical algebras") {
    const BlockForm t3 = unhinge(triangularize(upper_triangular(3)));
    CHECK(t3.radical.dim() == 3);
    CHECK(radical_block_supports(t3) == Supports{{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}});
    CHECK(t3.linked_partition.size() == 3);

    const BlockForm c = unhinge(triangularize(canonical_C()));
    CHECK(c.radical.dim() == 2);
    CHECK(radical_block_supports(c) == Supports{{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}});
    CHECK(c.linked_partition.size() == 1);

    const BlockForm b = unhinge(triangularize(canonical_B()));
    CHECK(b.radical.dim() == 1);
    std::size_t nonzero = 0;
    for (const auto& [key, dim] : radical_block_supports(b)) nonzero += dim > 0;
    CHECK(nonzero == 1);
    REQUIRE(b.linked_partition.size() == 2);

    const BlockForm d = unhinge(triangularize(canonical_D()));
    CHECK(d.linked_partition == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
    CHECK(d.block_diagonal.dim() == 3);

    const BlockForm ci = unhinge(triangularize(Span::scalars(3)));
    CHECK(ci.linked_partition == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
}

TEST_CASE("unhinge splits the algebra") {
    SampleConfig cfg;
    for (std::uint64_t i = 0; i < 10; ++i) {
        const Span a = make_family("3.2.5", {}).algebra.conjugate(sample_invertible(3, cfg, i));
        const BlockForm bf = unhinge(triangularize(a));
        CHECK(bf.unhinged);
        CHECK(bf.block_diagonal.dim() + bf.radical.dim() == bf.triangularized.dim());
        CHECK(bf.block_diagonal + bf.radical == bf.triangularized);
        CHECK(bf.triangularized.contains(bf.block_diagonal));
    }
}

TEST_CASE("module projections") {
    const ProjectionTriple t = coordinate_triple(1, 1, 1);
    CHECK(find_module_projection(lr_algebra(Mat::identity(3), t.q3), Side::left) == t.q3);
    CHECK(find_module_projection(lr_algebra(t.q1 + t.q2, Mat::identity(3)), Side::right) == t.q1 + t.q2);
    CHECK(find_module_projection(Span(3, 3), Side::left).is_zero());
    CHECK(find_module_projection(Span::full(3), Side::right) == Mat::identity(3));
    CHECK_THROWS_AS(find_module_projection(upper_triangular(3), Side::left), PreconditionError);
}
