#include "cornerlab/generators.hpp"

#include "cornerlab/linalg.hpp"

#include <stdexcept>

namespace cornerlab {

namespace {

constexpr int kRetryCap = 64;

Span span_of(std::vector<Mat> gens) {
    const std::size_t n = gens.front().rows(), p = gens.front().cols();
    return Span::from(gens, n, p);
}

Span sum(std::initializer_list<Span> parts) {
    auto it = parts.begin();
    Span out = *it;
    for (++it; it != parts.end(); ++it) out = out + *it;
    return out;
}

Span line(const Mat& m) { return span_of({m}); }

void require_rank_one(const Mat& q, const char* which) {
    if (rank(q) != 1) throw std::invalid_argument(std::string(which) + " must have rank one");
}

void require_size3(const ProjectionTriple& t) {
    if (t.n() != 3) throw std::invalid_argument("this family lives in M_3");
    require_rank_one(t.q1, "Q1");
    require_rank_one(t.q2, "Q2");
    require_rank_one(t.q3, "Q3");
}

GaussianRational parse_param(const std::string& text) { return GaussianRational::parse(text); }

std::size_t parse_size(const std::string& text) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || v < 1 || v > 16) throw std::invalid_argument("bad matrix size: " + text);
    return v;
}

Mat diagonal_pattern(const std::string& bits) {
    Mat m(bits.size(), bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') m(i, i) = 1;
        else if (bits[i] != '0') throw std::invalid_argument("LR pattern must be a string of 0 and 1: " + bits);
    }
    return m;
}

}  // namespace

bool is_idempotent(const Mat& e) { return e.is_square() && e * e == e; }

bool is_orthogonal_projection(const Mat& e) { return is_idempotent(e) && e.conj_transpose() == e; }

void ProjectionTriple::validate() const {
    const std::size_t n = q1.rows();
    for (const Mat* q : {&q1, &q2, &q3}) {
        if (!q->is_square() || q->rows() != n) throw std::invalid_argument("triple: shape mismatch");
        if (!is_orthogonal_projection(*q)) throw std::invalid_argument("triple: Q_i is not an orthogonal projection");
    }
    if (q1 + q2 + q3 != Mat::identity(n)) throw std::invalid_argument("triple: projections do not sum to I");
    if (!(q1 * q2).is_zero() || !(q1 * q3).is_zero() || !(q2 * q3).is_zero())
        throw std::invalid_argument("triple: projections are not mutually orthogonal");
}

std::array<std::size_t, 3> ProjectionTriple::ranks() const { return {rank(q1), rank(q2), rank(q3)}; }

ProjectionTriple coordinate_triple(std::size_t r1, std::size_t r2, std::size_t r3) {
    const std::size_t n = r1 + r2 + r3;
    if (n == 0) throw std::invalid_argument("triple: total rank must be positive");
    ProjectionTriple t{Mat(n, n), Mat(n, n), Mat(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        Mat& q = i < r1 ? t.q1 : (i < r1 + r2 ? t.q2 : t.q3);
        q(i, i) = 1;
    }
    return t;
}

ProjectionTriple random_triple(std::size_t r1, std::size_t r2, std::size_t r3, const SampleConfig& cfg,
                               std::uint64_t index) {
    ProjectionTriple t = coordinate_triple(r1, r2, r3);
    Mat u = sample_unitary(t.n(), cfg, index);
    Mat uh = u.conj_transpose();
    return {u * t.q1 * uh, u * t.q2 * uh, u * t.q3 * uh};
}

Span lr_algebra(const Mat& p, const Mat& q) {
    if (!is_orthogonal_projection(p) || !is_orthogonal_projection(q) || p.rows() != q.rows())
        throw std::invalid_argument("lr_algebra requires two orthogonal projections of equal size");
    const std::size_t n = p.rows();
    std::vector<Mat> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gens.push_back(p.col(i) * q.block(j, 0, 1, n));
    return Span::from(gens, n, n);
}

Span family_3_1_1(const ProjectionTriple& t, bool unital) {
    t.validate();
    Span a = line(t.q1) + lr_algebra(t.q1 + t.q2, t.q2 + t.q3);
    return unital ? a + line(t.q3) : a;
}

Span family_3_1_2(const ProjectionTriple& t, bool unital) {
    t.validate();
    require_rank_one(t.q1, "Q1");
    require_rank_one(t.q2, "Q2");
    Span a = sum({line(t.q1), line(t.q2), lr_algebra(t.q1 + t.q2, t.q3)});
    return unital ? a + line(t.q3) : a;
}

Span family_3_1_6(const ProjectionTriple& t, bool unital) {
    t.validate();
    require_rank_one(t.q1, "Q1");
    require_rank_one(t.q2, "Q2");
    Span a = sum({line(t.q1 + t.q2), lr_algebra(t.q1, t.q2), lr_algebra(t.q1 + t.q2, t.q3)});
    return unital ? a + line(t.q3) : a;
}

Span family_3_2_2(const ProjectionTriple& t) {
    t.validate();
    require_size3(t);
    return sum({line(t.q1), line(t.q2), lr_algebra(t.q2 + t.q3, t.q3)});
}

Span family_3_2_5(const ProjectionTriple& t) {
    t.validate();
    require_size3(t);
    return sum({line(t.q1 + t.q2), line(t.q3), lr_algebra(t.q1, t.q2 + t.q3)});
}

Span family_3_2_9(const ProjectionTriple& t) {
    t.validate();
    require_size3(t);
    return sum({lr_algebra(t.q1, t.q2 + t.q3), lr_algebra(t.q2, t.q3), Span::scalars(3)});
}

Span upper_triangular(std::size_t n) {
    std::vector<Mat> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) gens.push_back(Mat::unit(n, n, i, j));
    return Span::from(gens, n, n);
}

Span canonical_B() {
    return span_of({Mat{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}, Mat::unit(3, 3, 0, 1), Mat::unit(3, 3, 2, 2)});
}

Span canonical_C() { return C_r(1); }

Span canonical_D() {
    return span_of({Mat::unit(3, 3, 0, 0), Mat::unit(3, 3, 1, 1), Mat::unit(3, 3, 2, 2)});
}

Mat B_st_element(const GaussianRational& s, const GaussianRational& t, const GaussianRational& alpha,
                 const GaussianRational& beta, const GaussianRational& x) {
    const GaussianRational d = alpha - beta;
    return Mat{{alpha, s * d, x}, {0, beta, t * d}, {0, 0, alpha}};
}

Span B_st(const GaussianRational& s, const GaussianRational& t) {
    return span_of({B_st_element(s, t, 1, 0, 0), B_st_element(s, t, 0, 1, 0), B_st_element(s, t, 0, 0, 1)});
}

Span C_r(const GaussianRational& r) {
    if (r.is_zero()) throw std::invalid_argument("C_r requires r != 0");
    return span_of({Mat::identity(3), Mat::unit(3, 3, 0, 2), Mat{{0, 1, 0}, {0, 0, r}, {0, 0, 0}}});
}

Mat D_rst_element(const GaussianRational& r, const GaussianRational& s, const GaussianRational& t,
                  const GaussianRational& alpha, const GaussianRational& beta, const GaussianRational& gamma) {
    return Mat{{alpha, r * (alpha - beta), s * (alpha - gamma) - r * t * (gamma - beta)},
               {0, beta, t * (gamma - beta)},
               {0, 0, gamma}};
}

Span D_rst(const GaussianRational& r, const GaussianRational& s, const GaussianRational& t) {
    return span_of({D_rst_element(r, s, t, 1, 0, 0), D_rst_element(r, s, t, 0, 1, 0),
                    D_rst_element(r, s, t, 0, 0, 1)});
}

Family make_family(const std::string& name, const std::vector<std::string>& params) {
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi)
            throw std::invalid_argument("wrong number of parameters for family " + name);
    };
    if (name == "3.1.1" || name == "3.1.2" || name == "3.1.6") {
        need(0, 2);
        std::size_t n = params.empty() ? 3 : parse_size(params[0]);
        bool unital = true;
        if (params.size() == 2) {
            if (params[1] != "nonunital" && params[1] != "unital")
                throw std::invalid_argument("expected 'unital' or 'nonunital', got " + params[1]);
            unital = params[1] == "unital";
        }
        if (n < 3) throw std::invalid_argument("family " + name + " needs n >= 3");
        ProjectionTriple t = coordinate_triple(1, 1, n - 2);
        Span a = name == "3.1.1"   ? family_3_1_1(t, unital)
                 : name == "3.1.2" ? family_3_1_2(t, unital)
                                   : family_3_1_6(t, unital);
        return {name, a, t};
    }
    if (name == "3.2.2" || name == "3.2.5" || name == "3.2.9") {
        need(0, 0);
        ProjectionTriple t = coordinate_triple(1, 1, 1);
        Span a = name == "3.2.2" ? family_3_2_2(t) : name == "3.2.5" ? family_3_2_5(t) : family_3_2_9(t);
        return {name, a, t};
    }
    if (name == "B") return need(0, 0), Family{name, canonical_B(), std::nullopt};
    if (name == "C") return need(0, 0), Family{name, canonical_C(), std::nullopt};
    if (name == "D") return need(0, 0), Family{name, canonical_D(), std::nullopt};
    if (name == "Bst") {
        need(2, 2);
        return {name, B_st(parse_param(params[0]), parse_param(params[1])), std::nullopt};
    }
    if (name == "Cr") {
        need(1, 1);
        return {name, C_r(parse_param(params[0])), std::nullopt};
    }
    if (name == "Drst") {
        need(3, 3);
        return {name, D_rst(parse_param(params[0]), parse_param(params[1]), parse_param(params[2])), std::nullopt};
    }
    if (name == "LR") {
        need(2, 3);
        Mat p = diagonal_pattern(params[0]), q = diagonal_pattern(params[1]);
        if (p.rows() != q.rows()) throw std::invalid_argument("LR patterns must have equal length");
        Span a = lr_algebra(p, q);
        if (params.size() == 3) {
            if (params[2] != "unital") throw std::invalid_argument("expected 'unital', got " + params[2]);
            a = a.unitize();
        }
        return {name, a, std::nullopt};
    }
    if (name == "T3") return need(0, 0), Family{name, upper_triangular(3), std::nullopt};
    if (name == "full") {
        need(0, 1);
        return {name, Span::full(params.empty() ? 3 : parse_size(params[0])), std::nullopt};
    }
    if (name == "scalar") {
        need(0, 1);
        return {name, Span::scalars(params.empty() ? 3 : parse_size(params[0])), std::nullopt};
    }
    throw std::invalid_argument("unknown family: " + name);
}

Mat sample_invertible(std::size_t n, const SampleConfig& cfg, std::uint64_t index) {
    cfg.validate();
    Rng rng(cfg.seed, Stream::similarity, n, 0, index);
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Mat s = rng.matrix(n, n, cfg.entry_bound);
        if (!det(s).is_zero()) return s;
    }
    throw std::runtime_error("sample_invertible: retry cap reached");
}

RankFactors sample_idempotent_factors(std::size_t n, std::size_t r, const SampleConfig& cfg, std::uint64_t index) {
    cfg.validate();
    if (r == 0 || r >= n) throw std::invalid_argument("rank factors need 0 < r < n");
    Rng rng(cfg.seed, Stream::idempotent, n, r, index);
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Mat s = rng.matrix(n, n, cfg.entry_bound);
        if (det(s).is_zero()) continue;
        // S diag(I_r, 0) S^{-1} = (first r columns of S)(first r rows of S^{-1})
        Mat inv = inverse(s);
        return {s.block(0, 0, n, r), inv.block(0, 0, r, n)};
    }
    throw std::runtime_error("sample_idempotent: retry cap reached");
}

Mat sample_idempotent(std::size_t n, std::size_t r, const SampleConfig& cfg, std::uint64_t index) {
    if (r > n) throw std::invalid_argument("idempotent rank exceeds size");
    if (r == 0) return Mat(n, n);
    if (r == n) return Mat::identity(n);
    return sample_idempotent_factors(n, r, cfg, index).product();
}

Mat projection_from_columns(const Mat& v) { return projection_onto(v); }

RankFactors sample_projection_factors(std::size_t n, std::size_t r, const SampleConfig& cfg, std::uint64_t index) {
    cfg.validate();
    if (r == 0 || r >= n) throw std::invalid_argument("rank factors need 0 < r < n");
    Rng rng(cfg.seed, Stream::projection, n, r, index);
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Mat v = rng.matrix(n, r, cfg.entry_bound);
        if (rank(v) != r) continue;
        Mat vh = v.conj_transpose();
        return {v, inverse(vh * v) * vh};
    }
    throw std::runtime_error("sample_projection: retry cap reached");
}

Mat sample_projection(std::size_t n, std::size_t r, const SampleConfig& cfg, std::uint64_t index) {
    if (r > n) throw std::invalid_argument("projection rank exceeds size");
    if (r == 0) return Mat(n, n);
    if (r == n) return Mat::identity(n);
    return sample_projection_factors(n, r, cfg, index).product();
}

Mat sample_unitary(std::size_t n, const SampleConfig& cfg, std::uint64_t index) {
    cfg.validate();
    Rng rng(cfg.seed, Stream::unitary, n, 0, index);
    Mat x = rng.matrix(n, n, cfg.entry_bound);
    Mat k = x - x.conj_transpose();
    Mat id = Mat::identity(n);
    // K is skew-Hermitian, so I + K has no kernel.
    return (id - k) * inverse(id + k);
}

}  // namespace cornerlab
