#include "cornerlab/io.hpp"

#include <fstream>
#include <sstream>

namespace cornerlab {

Json to_json(const GaussianRational& z) { return z.to_string(); }

Json to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw PreconditionError("matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<GaussianRational> entries;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty()) throw PreconditionError("matrix row must be a nonempty array");
        if (cols == 0) cols = row.size();
        if (row.size() != cols) throw PreconditionError("matrix rows have different lengths");
        for (const auto& e : row) {
            if (e.is_number_integer()) {
                entries.emplace_back(e.get<long>());
                continue;
            }
            if (!e.is_string()) throw PreconditionError("matrix entry must be a string such as \"2/3-1/5i\"");
            try {
                entries.push_back(GaussianRational::parse(e.get<std::string>()));
            } catch (const std::invalid_argument& err) {
                throw PreconditionError(err.what());
            }
        }
    }
    return Mat(rows, cols, std::move(entries));
}

Json to_json(const Span& s) {
    Json gens = Json::array();
    for (const auto& b : s.basis()) gens.push_back(to_json(b));
    return Json{{"n", s.n()}, {"p", s.p()}, {"generators", gens}};
}

Span span_from_json(const Json& j) {
    if (!j.is_object()) throw PreconditionError("span must be a JSON object");
    for (const char* key : {"n", "p", "generators"})
        if (!j.contains(key)) throw PreconditionError(std::string("span object lacks \"") + key + "\"");
    if (!j["n"].is_number_unsigned() || !j["p"].is_number_unsigned())
        throw PreconditionError("span n and p must be positive integers");
    const auto n = j["n"].get<std::size_t>(), p = j["p"].get<std::size_t>();
    if (n == 0 || p == 0) throw PreconditionError("span n and p must be positive integers");
    if (!j["generators"].is_array()) throw PreconditionError("span generators must be an array");
    std::vector<Mat> gens;
    for (const auto& g : j["generators"]) {
        Mat m = matrix_from_json(g);
        if (m.rows() != n || m.cols() != p) throw PreconditionError("generator shape differs from (n, p)");
        gens.push_back(std::move(m));
    }
    return Span::from(gens, n, p);
}

Family parse_algebra(const std::string& text) {
    if (text.starts_with("@")) {
        std::ifstream in(text.substr(1));
        if (!in) throw PreconditionError("cannot open " + text.substr(1));
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw PreconditionError(std::string("invalid JSON: ") + e.what());
        }
        return {text.substr(1), span_from_json(j), std::nullopt};
    }
    if (!text.starts_with("family:"))
        throw PreconditionError("--algebra expects family:<name>[:params] or @file.json");
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(7));
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.empty() || parts[0].empty()) throw PreconditionError("missing family name");
    try {
        return make_family(parts[0], {parts.begin() + 1, parts.end()});
    } catch (const PreconditionError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw PreconditionError(e.what());
    }
}

namespace {

Json optional_matrix(const std::optional<Mat>& m) { return m ? to_json(*m) : Json(nullptr); }

Json form_json(const AffineForm& f) {
    Json out = Json::array();
    for (const auto& c : f.c) out.push_back(c.to_string());
    return out;
}

}  // namespace

Json to_json(const CornerReport& r) {
    Json j{{"verdict", to_string(r.verdict)}, {"samples_used", r.samples_used}};
    if (r.verdict == CornerReport::Verdict::counterexample) {
        j["witness_rank"] = r.witness_rank;
        j["witness_e"] = optional_matrix(r.witness_e);
        j["witness_product"] = optional_matrix(r.witness_product);
    }
    return j;
}

Json to_json(const Certificate& c) {
    Json checks = Json::array();
    for (const auto& chk : c.checks)
        checks.push_back({{"name", chk.name}, {"holds", chk.holds}, {"lhs", form_json(chk.lhs)},
                          {"rhs", form_json(chk.rhs)}});
    return Json{{"P", to_json(c.p)},
                {"projection_scale", to_json(c.projection_scale)},
                {"A", to_json(c.a)},
                {"B", to_json(c.b)},
                {"unknowns", c.unknowns},
                {"checks", checks},
                {"identity", {{"lhs", to_json(c.identity_lhs)}, {"rhs", to_json(c.identity_rhs)}}},
                {"product_in_corner", c.member},
                {"verified", c.verified}};
}

Json to_json(const CertificateB& c) {
    Json j{{"family", "Bst"}, {"s", to_json(c.s)}, {"t", to_json(c.t)}, {"k", to_json(c.k)}};
    j.update(to_json(static_cast<const Certificate&>(c)));
    return j;
}

Json to_json(const CertificateC& c) {
    Json j{{"family", "Cr"}, {"r", to_json(c.r)}};
    j.update(to_json(static_cast<const Certificate&>(c)));
    return j;
}

Json to_json(const CertificateD& c) {
    Json j{{"family", "Drst"}, {"r", to_json(c.r)}, {"s", to_json(c.s)}, {"t", to_json(c.t)},
           {"k", to_json(c.k)}, {"m", to_json(c.m)}};
    j.update(to_json(static_cast<const Certificate&>(c)));
    return j;
}

Json to_json(const Section2Report& r) {
    return Json{{"P", to_json(r.p)},
                {"PBP", to_json(r.generator)},
                {"PBP_squared", to_json(r.square)},
                {"expected_square", to_json(r.expected_square)},
                {"square_matches", r.square_matches},
                {"relation_holds_on_corner", r.relation_on_corner},
                {"relation_on_square", to_json(r.square_relation)},
                {"square_in_corner", r.square_in_corner},
                {"verdict", r.projection_compressible ? "no violation found" : "not projection compressible"},
                {"verified", r.verified}};
}

namespace {

Json partition_json(const std::vector<std::vector<std::size_t>>& groups) {
    Json out = Json::array();
    for (const auto& g : groups) {
        Json group = Json::array();
        for (auto i : g) group.push_back(i + 1);
        out.push_back(std::move(group));
    }
    return out;
}

Json supports_json(const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& sup) {
    Json out = Json::object();
    for (const auto& [key, dim] : sup) out[std::to_string(key.first + 1) + std::to_string(key.second + 1)] = dim;
    return out;
}

}  // namespace

Json structure_json(const BlockForm& bf) {
    return Json{{"block_dims", bf.block_dims},
                {"linked_partition", partition_json(bf.linked_partition)},
                {"block_diagonal_dim", bf.block_diagonal.dim()},
                {"radical_dim", bf.radical.dim()},
                {"radical_supports", supports_json(radical_block_supports(bf))},
                {"unhinged", bf.unhinged},
                {"similarity", to_json(bf.similarity)}};
}

Json to_json(const ClassLabel& l) {
    return Json{{"tag", to_string(l.tag)},
                {"compressible", l.compressible},
                {"transposed", l.transposed},
                {"block_dims", l.evidence.block_dims},
                {"block_diagonal_dim", l.evidence.bd_dim},
                {"radical_dim", l.evidence.radical_dim},
                {"linked_partition", partition_json(l.evidence.linked_partition)},
                {"radical_supports", supports_json(l.evidence.supports)}};
}

Json to_json(const CrossValidation& cv) {
    Json j = to_json(cv.label);
    j["cross_validation"] = {{"projection", to_json(cv.projection)},
                             {"idempotent", to_json(cv.idempotent)},
                             {"consistent", cv.consistent}};
    return j;
}

Json to_json(const RunManifest& m) {
    return Json{{"command_line", m.command_line},
                {"seed", m.config.seed},
                {"samples_per_rank", m.config.count},
                {"entry_bound", m.config.entry_bound},
                {"version", m.version},
                {"prng", m.prng}};
}

}  // namespace cornerlab
