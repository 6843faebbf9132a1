#include "doctest.h"

#include "cornerlab/linalg.hpp"
#include "cornerlab/polynomial.hpp"

#include <algorithm>

using namespace cornerlab;
using G = GaussianRational;

namespace {
G q(long p, long d) { return G::fraction(p, d); }
G c(long re_p, long re_d, long im_p, long im_d) { return G(mpq_class(re_p, re_d), mpq_class(im_p, im_d)); }
}  // namespace

TEST_CASE("gaussian rational arithmetic and text form") {
    const G z = G::parse("2/3-1/5i"), w = G::parse("1+i");
    CHECK(z * w == c(13, 15, 7, 15));
    CHECK(z / w == c(7, 30, -13, 30));
    CHECK(z.to_string() == "2/3-1/5i");
    CHECK(G::parse("-i") == c(0, 1, -1, 1));
    CHECK(G::parse("-i").to_string() == "-i");
    CHECK(G::parse("3/2i").to_string() == "3/2i");
    CHECK(G(0).to_string() == "0");
    CHECK(w.conj() == G::parse("1-i"));
    CHECK(w.norm() == 2);
    CHECK_THROWS_AS(G::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(G::parse("abc"), std::invalid_argument);
    CHECK_THROWS(G(0).inverse());
}

TEST_CASE("determinant and inverse") {
    const Mat m{{q(2, 3), G::parse("1+i"), -1}, {0, 5, G::parse("1/2-i")}, {3, G::parse("-2i"), 7}};
    CHECK(det(m) == c(265, 6, -5, 6));
    const Mat a{{1, G::parse("2i")}, {3, 4}};
    const Mat expected{{c(4, 13, 6, 13), c(3, 13, -2, 13)}, {c(-3, 13, -9, 26), c(1, 13, 3, 26)}};
    CHECK(inverse(a) == expected);
    CHECK(inverse(a) * a == Mat::identity(2));
    CHECK_THROWS(inverse(Mat{{1, 2}, {2, 4}}));
}

TEST_CASE("rref, rank and kernel") {
    const Mat k{{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 1, 0}};
    const RrefResult r = rref(k);
    CHECK(r.rank == 2);
    CHECK(r.form == Mat{{1, 0, 1, 0}, {0, 1, 1, 2}, {0, 0, 0, 0}});
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    const auto ker = kernel(k);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) CHECK((k * v).is_zero());
    CHECK(rank(Mat::identity(4)) == 4);
}

TEST_CASE("solve returns a solution or nullopt") {
    const Mat a{{1, 1}, {1, -1}};
    auto x = solve(a, Mat{{3}, {1}});
    REQUIRE(x);
    CHECK(*x == Mat{{2}, {1}});
    CHECK_FALSE(solve(Mat{{1, 1}, {1, 1}}, Mat{{1}, {2}}));
}

TEST_CASE("transposes") {
    const Mat a{{1, 2, G::i()}, {4, 5, 6}, {7, 8, 9}};
    CHECK(a.anti_transpose() == Mat{{9, 6, G::i()}, {8, 5, 2}, {7, 4, 1}});
    CHECK(a.conj_transpose()(2, 0) == -G::i());
    CHECK(Mat::flip(3) * a.transpose() * Mat::flip(3) == a.anti_transpose());
}

TEST_CASE("shape mismatches throw") {
    CHECK_THROWS_AS(Mat(2, 3) * Mat(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(Mat(2, 3) + Mat(3, 2), std::invalid_argument);
}

TEST_CASE("characteristic polynomial and Gaussian rational roots") {
    const Mat a{{2, 1, 0}, {0, 2, 0}, {0, 0, 3}};
    CHECK(charpoly(a) == Poly{-12, 16, -7, 1});
    CHECK(rational_eigenvalues(a) == std::vector<G>{2, 3});
    // (x - 1/3)(x - (2+i))(x + 7/1234567)
    Poly p{1};
    for (const G& r : {q(1, 3), G::parse("2+i"), q(-7, 1234567)}) {
        Poly next(p.size() + 1);
        for (std::size_t k = 0; k < p.size(); ++k) {
            next[k + 1] += p[k];
            next[k] -= r * p[k];
        }
        p = next;
    }
    CHECK(gaussian_rational_roots(p) == std::vector<G>{q(-7, 1234567), q(1, 3), G::parse("2+i")});
    CHECK(gaussian_rational_roots(Poly{-2, 0, 1}).empty());  // x^2 - 2
    CHECK(gaussian_rational_roots(Poly{1, 0, 1}) == std::vector<G>{-G::i(), G::i()});
}

TEST_CASE("roots with large denominators are recovered") {
    const G big = G::parse("123456789012345678901234567/98765432109876543210987654321+5/77777777777777777777i");
    // (x - big)(x - 3) = x^2 - (big + 3) x + 3 big
    const Poly r{big * 3, -(big + 3), 1};
    auto roots = gaussian_rational_roots(r);
    REQUIRE(roots.size() == 2);
    CHECK(std::find(roots.begin(), roots.end(), big) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), G(3)) != roots.end());
}
