#pragma once

/**
 * @file io.hpp
 * @brief JSON encoding of matrices, spans and reports, and parsing of the
 * --algebra argument.
 *
 * Entries are written as "RE+IMi" strings and matrices as arrays of rows.
 * Objects keep insertion order so equal inputs give byte-identical output.
 */

#include "cornerlab/classify3.hpp"
#include "cornerlab/compress.hpp"
#include "cornerlab/structure.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace cornerlab {

using Json = nlohmann::ordered_json;

Json to_json(const GaussianRational& z);
Json to_json(const Mat& m);
/// Throws PreconditionError on ragged rows, empty matrices or bad entries.
Mat matrix_from_json(const Json& j);

/// {"n", "p", "generators"} with the canonical basis as generators.
Json to_json(const Span& s);
/// Span of the listed generators (not closed under products).
Span span_from_json(const Json& j);

/// Parses "family:<name>[:param...]" or "@path.json"; PreconditionError on failure.
Family parse_algebra(const std::string& text);

Json to_json(const CornerReport& r);
Json to_json(const Certificate& c);
Json to_json(const CertificateB& c);
Json to_json(const CertificateC& c);
Json to_json(const CertificateD& c);
Json to_json(const Section2Report& r);
/// Block data of an unhinged form; block indices are 1-based.
Json structure_json(const BlockForm& bf);
Json to_json(const ClassLabel& l);
Json to_json(const CrossValidation& cv);

struct RunManifest {
    std::vector<std::string> command_line;
    SampleConfig config;
    std::string version = CORNERLAB_VERSION;
    std::string prng = kPrngName;
};

Json to_json(const RunManifest& m);

}  // namespace cornerlab
