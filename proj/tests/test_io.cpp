#include "doctest.h"

#include "cornerlab/io.hpp"

#include <cstdio>
#include <fstream>

using namespace cornerlab;

TEST_CASE("matrix text format round-trips") {
    const Mat m{{GaussianRational::parse("2/3-1/5i"), 1}, {-GaussianRational::i(), 0}};
    const Json j = to_json(m);
    CHECK(j.dump() == R"([["2/3-1/5i","1"],["-i","0"]])");
    CHECK(matrix_from_json(j) == m);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), PreconditionError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["x"]])")), PreconditionError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([])")), PreconditionError);
}

TEST_CASE("span JSON") {
    const Span b = canonical_B();
    CHECK(span_from_json(to_json(b)) == b);
    CHECK_THROWS_AS(span_from_json(Json::parse(R"({"n":2,"p":2,"generators":[[["1"]]]})")), PreconditionError);
    CHECK_THROWS_AS(span_from_json(Json::parse(R"({"n":2})")), PreconditionError);
}

TEST_CASE("algebra argument") {
    CHECK(parse_algebra("family:D").algebra == canonical_D());
    CHECK(parse_algebra("family:Cr:1/2").algebra == C_r(GaussianRational::parse("1/2")));
    CHECK(parse_algebra("family:3.1.1:4:nonunital").algebra.n() == 4);
    CHECK_THROWS_AS(parse_algebra("D"), PreconditionError);
    CHECK_THROWS_AS(parse_algebra("family:nope"), PreconditionError);
    CHECK_THROWS_AS(parse_algebra("family:Cr:0"), PreconditionError);
    CHECK_THROWS_AS(parse_algebra("@/nonexistent/file.json"), PreconditionError);

    const std::string path = "io_test_span.json";
    {
        std::ofstream out(path);
        out << to_json(upper_triangular(3)).dump();
    }
    CHECK(parse_algebra("@" + path).algebra == upper_triangular(3));
    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK_THROWS_AS(parse_algebra("@" + path), PreconditionError);
    std::remove(path.c_str());
}

TEST_CASE("reports") {
    const Json c = to_json(classify(canonical_D()));
    CHECK(c["tag"] == "CLASS_D");
    CHECK(c["compressible"] == false);
    CHECK(c["linked_partition"].dump() == "[[1],[2],[3]]");
    const Json s = to_json(repro_section2());
    CHECK(s["PBP_squared"].dump() == R"([["42","-39","-3"],["-39","42","-3"],["-3","-3","6"]])");
    CHECK(s["verdict"] == "not projection compressible");
    const Json b = to_json(certify_B(0, 0, 1));
    CHECK(b["verified"] == true);
    CHECK(b["identity"]["rhs"] == "3");
    RunManifest m;
    m.command_line = {"corner-lab", "suite"};
    const Json mj = to_json(m);
    CHECK(mj["seed"] == 0xC0FFEE);
    CHECK(mj["prng"] == kPrngName);
}
