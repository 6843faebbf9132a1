#include "cornerlab/suite.hpp"

#include "cornerlab/classify3.hpp"
#include "cornerlab/compress.hpp"
#include "cornerlab/generators.hpp"
#include "cornerlab/linalg.hpp"
#include "cornerlab/structure.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

namespace cornerlab {

namespace {

using G = GaussianRational;
using Failure = std::optional<std::string>;

struct Tally {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail;

    void record(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) detail = what;
    }
};

SampleConfig with_seed(std::uint64_t seed, std::size_t count = 200) {
    SampleConfig c;
    c.seed = seed;
    c.count = count;
    return c;
}

std::string idx(const std::string& label, std::size_t i) { return label + " #" + std::to_string(i); }

// Acceptance criteria

Tally criterion_sec2() {
    Tally t;
    const Section2Report rep = repro_section2();
    const Mat golden{{42, -39, -3}, {-39, 42, -3}, {-3, -3, 6}};
    t.record(rep.square == golden, "(PBP)^2 differs from the golden matrix");
    t.record(rep.relation_on_corner, "b22 + 5 b23 = 0 fails on the corner");
    t.record(!rep.projection_compressible, "corner reported as an algebra");
    t.record(rep.verified, "report not verified");
    return t;
}

Tally criterion_thm_b(const SampleConfig& cfg) {
    Tally t;
    for (std::size_t i = 0; i < 100; ++i) {
        Rng rng(cfg.seed, Stream::parameter, 2, 0, i);
        const G s(rng.rational(cfg.entry_bound)), tt(rng.rational(cfg.entry_bound));
        const CertificateB c = certify_B(s, tt, default_k_for_B(s, tt));
        t.record(c.verified, idx("s=" + s.to_string() + " t=" + tt.to_string(), i));
    }
    return t;
}

Tally criterion_thm_c(const SampleConfig& cfg) {
    Tally t;
    for (std::size_t i = 0; i < 100; ++i) {
        Rng rng(cfg.seed, Stream::parameter, 3, 0, i);
        const G r(rng.nonzero_rational(cfg.entry_bound));
        t.record(certify_C(r).verified, idx("r=" + r.to_string(), i));
    }
    return t;
}

Tally criterion_thm_d(const SampleConfig& cfg) {
    Tally t;
    for (std::size_t i = 0; i < 100; ++i) {
        Rng rng(cfg.seed, Stream::parameter, 4, 0, i);
        const G r(rng.rational(cfg.entry_bound)), s(rng.rational(cfg.entry_bound)), tt(rng.rational(cfg.entry_bound));
        const std::string label = idx("r=" + r.to_string() + " s=" + s.to_string() + " t=" + tt.to_string(), i);
        auto km = default_km_for_D(r, s, tt);
        if (!km) {
            t.record(false, label + ": no admissible (k, m) in the scan");
            continue;
        }
        t.record(certify_D(r, s, tt, km->first, km->second).verified, label);
    }
    return t;
}

std::vector<Family> compressible_battery(const SampleConfig& cfg) {
    std::vector<Family> out;
    for (const char* name : {"3.1.1", "3.1.2", "3.1.6"})
        for (const char* n : {"3", "4"}) out.push_back(make_family(name, {n, "unital"}));
    for (const char* name : {"3.2.2", "3.2.5", "3.2.9"}) out.push_back(make_family(name, {}));
    for (std::size_t j = 0; j < 5; ++j) {
        const std::size_t n = 3 + j % 2;
        const std::size_t rp = 1 + j % (n - 1), rq = 1 + (j + 1) % (n - 1);
        const Span lr = lr_algebra(sample_projection(n, rp, cfg, 1000 + j), sample_projection(n, rq, cfg, 2000 + j));
        out.push_back({"LR#" + std::to_string(j), lr, std::nullopt});
        out.push_back({"unitized LR#" + std::to_string(j), lr.unitize(), std::nullopt});
    }
    return out;
}

Tally criterion_compressible(const SampleConfig& cfg) {
    Tally t;
    for (const auto& f : compressible_battery(cfg))
        for (Mode mode : {Mode::idempotent, Mode::projection}) {
            const CornerReport rep = falsify(f.algebra, mode, cfg);
            t.record(rep.verdict == CornerReport::Verdict::no_counterexample_found,
                     f.name + " (" + to_string(mode) + "): counterexample at rank " + std::to_string(rep.witness_rank));
        }
    return t;
}

Tally criterion_dichotomy(const SampleConfig& cfg) {
    Tally t;
    struct Item {
        Family f;
        Hypothesis membership;
    };
    const std::vector<Item> items{{make_family("3.1.6", {"3", "unital"}), Hypothesis::eq2e_membership},
                                  {make_family("3.1.6", {"4", "unital"}), Hypothesis::eq2e_membership},
                                  {make_family("3.2.5", {}), Hypothesis::eq2e_membership},
                                  {make_family("3.2.9", {}), Hypothesis::eq1e_membership}};
    for (const auto& it : items) {
        const std::size_t n = it.f.triple->n();
        for (std::size_t i = 0; i < cfg.count; ++i) {
            const Mat e = sample_idempotent(n, 2, cfg, i);
            const bool ok = lemma_precondition_check(it.f, e, it.membership) ||
                            lemma_precondition_check(it.f, e, Hypothesis::eq1_fixed);
            t.record(ok, idx(it.f.name + " n=" + std::to_string(n), i));
        }
    }
    return t;
}

std::vector<std::pair<ClassTag, Span>> class_representatives() {
    const ProjectionTriple t = coordinate_triple(1, 1, 1);
    return {{ClassTag::FULL, Span::full(3)},
            {ClassTag::UNITIZED_LR, lr_algebra(t.q1 + t.q2, t.q2 + t.q3).unitize()},
            {ClassTag::EX_3_1_1, family_3_1_1(t, true)},
            {ClassTag::EX_3_1_2, family_3_1_2(t, true)},
            {ClassTag::EX_3_1_6, family_3_1_6(t, true)},
            {ClassTag::EX_3_2_2, family_3_2_2(t)},
            {ClassTag::EX_3_2_5, family_3_2_5(t)},
            {ClassTag::EX_3_2_9, family_3_2_9(t)},
            {ClassTag::CLASS_B, canonical_B()},
            {ClassTag::CLASS_C, canonical_C()},
            {ClassTag::CLASS_D, canonical_D()},
            {ClassTag::SCALAR, Span::scalars(3)}};
}

Tally criterion_classifier(const SampleConfig& cfg) {
    Tally t;
    for (const auto& [tag, rep] : class_representatives())
        for (std::size_t i = 0; i < 50; ++i) {
            const Span conj = rep.conjugate(sample_invertible(3, cfg, i));
            for (const Span& s : {conj, conj.transpose()}) {
                const std::string label = idx(to_string(tag) + (s == conj ? "" : " transposed"), i);
                const CrossValidation cv = cross_validate(s, cfg);
                t.record(cv.label.tag == tag, label + ": labelled " + to_string(cv.label.tag));
                t.record(cv.consistent, label + ": sampling disagrees with the label");
            }
        }
    return t;
}

Tally criterion_structure(const SampleConfig& cfg) {
    Tally t;
    using Partition = std::vector<std::vector<std::size_t>>;
    struct Expect {
        std::string name;
        Span algebra;
        std::size_t radical_dim;
        Partition partition;
    };
    const Partition singletons{{0}, {1}, {2}}, triple{{0, 1, 2}};
    const std::vector<Expect> cases{{"T3", upper_triangular(3), 3, singletons},
                                    {"B", canonical_B(), 1, {{0, 2}, {1}}},
                                    {"C", canonical_C(), 2, triple},
                                    {"D", canonical_D(), 0, singletons},
                                    {"CI", Span::scalars(3), 0, triple}};
    for (const auto& c : cases)
        for (std::size_t i = 0; i < 50; ++i) {
            const BlockForm bf = unhinge(triangularize(c.algebra.conjugate(sample_invertible(3, cfg, i))));
            const std::string label = idx(c.name, i);
            t.record(bf.block_dims == std::vector<std::size_t>{1, 1, 1}, label + ": block dims");
            t.record(bf.radical.dim() == c.radical_dim, label + ": radical dim " + std::to_string(bf.radical.dim()));
            // B's linked pair depends on the flag; only its shape is similarity stable.
            if (c.name == "B") {
                std::vector<std::size_t> sizes;
                for (const auto& g : bf.linked_partition) sizes.push_back(g.size());
                std::sort(sizes.begin(), sizes.end());
                t.record(sizes == std::vector<std::size_t>{1, 2}, label + ": linked partition");
            } else {
                t.record(bf.linked_partition == c.partition, label + ": linked partition");
            }
        }
    return t;
}

Tally criterion_properties(std::uint64_t seed) {
    Tally t;
    for (const auto& name : property_names()) {
        const PropertyResult r = run_property(name, 100, seed);
        t.record(r.failures == 0 && r.cases >= 100, name + ": " + r.first_failure);
    }
    return t;
}

// Property checks. Each case draws from its own (seed, property, index) address.

struct CaseContext {
    Rng rng;
    SampleConfig cfg;
    std::uint64_t index;  ///< sampler index, disjoint across properties
};

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return static_cast<std::size_t>(rng.uniform(lo, hi)); }

/// Entries zero with probability 1/2, otherwise small Gaussian rationals.
Mat sparse_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    Mat m(rows, cols);
    for (auto& e : m.entries())
        if (rng.below(2) == 1) e = rng.gaussian(3);
    return m;
}

Mat upper_sparse(Rng& rng, std::size_t n) {
    Mat m = sparse_matrix(rng, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) m(i, j) = G();
    return m;
}

/// Closure of one or two conjugated upper triangular generators, plus the identity.
Span random_split_algebra(CaseContext& c, std::size_t n) {
    const Mat s = sample_invertible(n, c.cfg, c.index);
    const Mat s_inv = inverse(s);
    std::vector<Mat> gens;
    const std::size_t k = pick(c.rng, 1, 2);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(s_inv * upper_sparse(c.rng, n) * s);
    return Span::from(gens, n, n).closure().unitize();
}

/// Mixed pool of algebras, compressible or not, unital or not, in M_3 or M_4.
Span pool_algebra(CaseContext& c) {
    const std::size_t kind = pick(c.rng, 0, 7);
    const Mat s = sample_invertible(kind < 3 ? 3 : 4, c.cfg, c.index);
    switch (kind) {
        case 0: return canonical_B().conjugate(s);
        case 1: return canonical_C().conjugate(s);
        case 2: return canonical_D().conjugate(s);
        case 3: return family_3_1_1(coordinate_triple(1, 1, 2), false).conjugate(s);
        case 4: return family_3_1_2(coordinate_triple(1, 1, 2), false).conjugate(s);
        case 5: return family_3_1_6(coordinate_triple(1, 1, 2), false).conjugate(s);
        case 6:
            return lr_algebra(sample_projection(4, pick(c.rng, 1, 3), c.cfg, c.index),
                              sample_projection(4, pick(c.rng, 1, 3), c.cfg, c.index + 1));
        default: return random_split_algebra(c, 4);
    }
}

/// Unital split algebra for the structure properties.
Span pool_unital(CaseContext& c) {
    const std::size_t kind = pick(c.rng, 0, 4);
    if (kind == 0) return random_split_algebra(c, pick(c.rng, 2, 4));
    if (kind == 1) return make_family(pick(c.rng, 0, 1) ? "3.1.2" : "3.1.6", {"4", "unital"}).algebra;
    if (kind == 2) return upper_triangular(4);
    const auto reps = class_representatives();
    return reps[pick(c.rng, 0, reps.size() - 1)].second;
}

Mat random_idempotent(CaseContext& c, std::size_t n) { return sample_idempotent(n, pick(c.rng, 1, n - 1), c.cfg, c.index); }

bool closed_corner(const Span& s, const Mat& e) { return s.compress(e).is_mult_closed(); }

Failure fail_if(bool bad, const std::string& what) { return bad ? Failure(what) : std::nullopt; }

Failure prop_associativity(CaseContext& c) {
    const std::size_t a = pick(c.rng, 1, 4), b = pick(c.rng, 1, 4), d = pick(c.rng, 1, 4), e = pick(c.rng, 1, 4);
    const Mat x = c.rng.matrix(a, b, 5), y = c.rng.matrix(b, d, 5), z = c.rng.matrix(d, e, 5);
    return fail_if((x * y) * z != x * (y * z), "(xy)z != x(yz)");
}

Failure prop_rref_idempotent(CaseContext& c) {
    const Mat a = sparse_matrix(c.rng, pick(c.rng, 1, 5), pick(c.rng, 1, 5));
    const Mat r = rref(a).form;
    return fail_if(rref(r).form != r, "rref(rref(a)) != rref(a)");
}

Failure prop_inverse(CaseContext& c) {
    const std::size_t n = pick(c.rng, 1, 4);
    const Mat a = c.rng.matrix(n, n, 5);
    if (det(a).is_zero()) return std::nullopt;
    const Mat inv = inverse(a);
    return fail_if(inv * a != Mat::identity(n) || a * inv != Mat::identity(n), "inverse is not two-sided");
}

Failure prop_anti_transpose(CaseContext& c) {
    const std::size_t n = pick(c.rng, 1, 4);
    const Mat a = c.rng.matrix(n, n, 5), b = c.rng.matrix(n, n, 5);
    if (a.anti_transpose().anti_transpose() != a) return "anti-transpose is not an involution";
    return fail_if((a * b).anti_transpose() != b.anti_transpose() * a.anti_transpose(),
                   "anti-transpose does not reverse products");
}

Failure prop_conj_transpose(CaseContext& c) {
    const Mat a = c.rng.matrix(pick(c.rng, 1, 4), pick(c.rng, 1, 4), 5);
    return fail_if(a.conj_transpose().conj_transpose() != a, "conjugate transpose is not an involution");
}

Failure prop_closure(CaseContext& c) {
    const std::size_t n = pick(c.rng, 2, 3);
    std::vector<Mat> gens;
    for (std::size_t i = 0, k = pick(c.rng, 1, 2); i < k; ++i) gens.push_back(sparse_matrix(c.rng, n, n));
    const Span s = Span::from(gens, n, n);
    const Span cl = s.closure();
    if (cl.closure() != cl) return "closure is not idempotent";
    if (!cl.contains(s)) return "closure does not contain the span";
    if (s.is_mult_closed() != (cl == s)) return "is_mult_closed disagrees with closure";
    return fail_if(!cl.is_mult_closed(), "closure is not multiplicatively closed");
}

Failure prop_compress_dim(CaseContext& c) {
    const Span s = pool_algebra(c);
    const std::size_t r = pick(c.rng, 1, s.n() - 1);
    const Mat e = sample_idempotent(s.n(), r, c.cfg, c.index);
    return fail_if(s.compress(e).dim() > std::min(s.dim(), r * r), "corner dimension exceeds min(dim s, r^2)");
}

Failure prop_transpose_symmetry(CaseContext& c) {
    const Span s = pool_algebra(c);
    const Mat e = random_idempotent(c, s.n());
    return fail_if(corner_is_algebra(s, e, Mode::idempotent) !=
                       corner_is_algebra(span_transpose(s), e.transpose(), Mode::idempotent),
                   "corner verdict changes under transposition");
}

Failure prop_unitization(CaseContext& c) {
    const Span s = pool_algebra(c);
    const Mat e = random_idempotent(c, s.n());
    return fail_if(closed_corner(s, e) && !closed_corner(s.unitize(), e), "unitization breaks a closed corner");
}

Failure prop_rank_one_absorption(CaseContext& c) {
    const std::size_t n = pick(c.rng, 2, 4);
    const Mat x = c.rng.matrix(n, 1, 5), y = c.rng.matrix(n, 1, 5), r = c.rng.matrix(n, n, 5);
    const Mat a = rank_one(x.entries(), y.entries());
    if (a.is_zero()) return std::nullopt;
    const std::vector<Mat> gen{a};
    return fail_if(!Span::from(gen).contains(a * r * a), "ARA is not a multiple of A");
}

Failure prop_idempotent_in_algebra(CaseContext& c) {
    // Unit upper triangular conjugates of 0/1 diagonals are idempotents of T_n.
    const std::size_t n = pick(c.rng, 2, 4);
    Mat u = upper_sparse(c.rng, n);
    Mat d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        u(i, i) = G(1);
        d(i, i) = G(static_cast<long>(c.rng.below(2)));
    }
    const Mat s = sample_invertible(n, c.cfg, c.index);
    const Mat s_inv = inverse(s);
    const Span a = upper_triangular(n).conjugate(s, s_inv);
    const Mat e = s_inv * (u * d * inverse(u)) * s;
    if (!a.contains(e) || !is_idempotent(e)) return "constructed idempotent is not in the algebra";
    return fail_if(!closed_corner(a, e), "corner by an idempotent of the algebra is not closed");
}

Failure prop_rank_one_corner(CaseContext& c) {
    const Span s = pool_algebra(c);
    return fail_if(!closed_corner(s, sample_idempotent(s.n(), 1, c.cfg, c.index)), "rank-one corner is not closed");
}

Failure prop_families_closed(CaseContext& c) {
    const std::size_t r3 = pick(c.rng, 1, 2);
    const ProjectionTriple t = random_triple(1, 1, r3, c.cfg, c.index);
    const bool unital = c.rng.below(2) == 1;
    for (const Span& s : {family_3_1_1(t, unital), family_3_1_2(t, unital), family_3_1_6(t, unital)})
        if (!s.is_mult_closed()) return "3.1.x family is not closed";
    if (r3 == 1)
        for (const Span& s : {family_3_2_2(t), family_3_2_5(t), family_3_2_9(t)})
            if (!s.is_mult_closed()) return "3.2.x family is not closed";
    return std::nullopt;
}

Failure prop_samplers(CaseContext& c) {
    const std::size_t n = pick(c.rng, 2, 4), r = pick(c.rng, 0, n);
    const Mat e = sample_idempotent(n, r, c.cfg, c.index), p = sample_projection(n, r, c.cfg, c.index);
    if (e * e != e || rank(e) != r) return "sampled idempotent has the wrong square or rank";
    return fail_if(p * p != p || p.conj_transpose() != p || rank(p) != r, "sampled projection is not a rank-r projection");
}

Failure prop_lr_hypothesis(CaseContext& c) {
    const std::size_t n = pick(c.rng, 2, 4);
    const Mat p = sample_projection(n, pick(c.rng, 1, n - 1), c.cfg, c.index);
    const Mat q = sample_projection(n, pick(c.rng, 1, n - 1), c.cfg, c.index + 1);
    const Span lr = lr_algebra(p, q);
    const Mat e = random_idempotent(c, n);
    for (const auto& a : lr.basis())
        for (const auto& b : lr.basis())
            if (!lr.contains(a * e * b)) return "A E B escapes the LR algebra";
    return std::nullopt;
}

Failure prop_parametric(CaseContext& c) {
    const G s = c.rng.gaussian(5), t = c.rng.gaussian(5), u = c.rng.gaussian(5);
    G r = c.rng.gaussian(5);
    if (r.is_zero()) r = G(1);
    for (const Span& a : {B_st(s, t), C_r(r), D_rst(u, s, t)})
        if (a.dim() != 3 || !a.contains(Mat::identity(3)) || !a.is_mult_closed())
            return "parametric family is not a unital 3-dimensional algebra";
    return std::nullopt;
}

Failure prop_counterexample_soundness(CaseContext& c) {
    const Span reps[] = {canonical_B(), canonical_C(), canonical_D()};
    const Span s = reps[pick(c.rng, 0, 2)].conjugate(sample_invertible(3, c.cfg, c.index));
    const Mode mode = c.rng.below(2) == 1 ? Mode::projection : Mode::idempotent;
    const CornerReport rep = falsify(s, mode, with_seed(c.cfg.seed + c.index, 20));
    if (rep.verdict != CornerReport::Verdict::counterexample) return std::nullopt;
    if (corner_is_algebra(s, *rep.witness_e, mode)) return "witness corner is an algebra";
    return fail_if(s.compress(*rep.witness_e).contains(*rep.witness_product), "witness product lies in the corner");
}

Failure prop_compressible_corners(CaseContext& c) {
    static const std::vector<Family> battery = compressible_battery(SampleConfig{});
    const Family& f = battery[pick(c.rng, 0, battery.size() - 1)];
    const Mat e = random_idempotent(c, f.algebra.n());
    return fail_if(!corner_is_algebra(f.algebra, e, Mode::idempotent), f.name + " has a non-closed corner");
}

Failure prop_certificates(CaseContext& c) {
    const G s = c.rng.gaussian(5), t = c.rng.gaussian(5), r = c.rng.gaussian(5);
    G k(c.rng.nonzero_rational(5));
    while (k == s || k == t) k += G(1);
    if (!certify_B(s, t, k).verified) return "certify_B failed";
    if (!r.is_zero() && !certify_C(r).verified) return "certify_C failed";
    G km(c.rng.nonzero_rational(5)), m(c.rng.nonzero_rational(5));
    if (!certify_D_violations(r, s, t, km, m).empty()) return std::nullopt;
    return fail_if(!certify_D(r, s, t, km, m).verified, "certify_D failed");
}

Failure prop_dichotomy(CaseContext& c) {
    const bool nine = c.rng.below(2) == 1;
    const Family f = make_family(nine ? "3.2.9" : "3.2.5", {});
    const Mat e = sample_idempotent(3, 2, c.cfg, c.index);
    const bool ok = lemma_precondition_check(f, e, nine ? Hypothesis::eq1e_membership : Hypothesis::eq2e_membership) ||
                    lemma_precondition_check(f, e, Hypothesis::eq1_fixed);
    return fail_if(!ok, f.name + ": neither hypothesis holds");
}

std::vector<std::size_t> sorted_dims(const BlockForm& bf) {
    auto d = bf.block_dims;
    std::sort(d.begin(), d.end());
    return d;
}

Failure prop_triangularize_invariance(CaseContext& c) {
    const Span a = pool_unital(c);
    const Span b = a.conjugate(sample_invertible(a.n(), c.cfg, c.index));
    return fail_if(sorted_dims(triangularize(a)) != sorted_dims(triangularize(b)), "block sizes change under similarity");
}

Failure prop_unhinged_sum(CaseContext& c) {
    const Span base = pool_unital(c);
    const BlockForm bf = unhinge(triangularize(base.conjugate(sample_invertible(base.n(), c.cfg, c.index))));
    if (bf.block_diagonal.dim() + bf.radical.dim() != bf.triangularized.dim()) return "dimensions do not add up";
    if (bf.block_diagonal + bf.radical != bf.triangularized) return "BD + Rad differs from the algebra";
    for (const auto& r : bf.radical.basis())
        for (std::size_t i = 0; i < bf.blocks(); ++i)
            if (!block_of(bf, r, i, i).is_zero()) return "radical element with a nonzero diagonal block";
    return std::nullopt;
}

Failure prop_nilpotency(CaseContext& c) {
    const Span base = pool_unital(c);
    const BlockForm bf = triangularize(base.conjugate(sample_invertible(base.n(), c.cfg, c.index)));
    const auto& rad = bf.radical.basis();
    if (rad.empty()) return std::nullopt;
    Mat prod = Mat::identity(base.n());
    for (std::size_t i = 0; i < bf.blocks(); ++i) prod = prod * rad[pick(c.rng, 0, rad.size() - 1)];
    return fail_if(!prod.is_zero(), "product of radical elements does not vanish");
}

Failure prop_linked_sizes(CaseContext& c) {
    const Span base = pool_unital(c);
    const BlockForm bf = triangularize(base.conjugate(sample_invertible(base.n(), c.cfg, c.index)));
    for (const auto& g : bf.linked_partition)
        for (auto i : g)
            if (bf.block_dims[i] != bf.block_dims[g.front()]) return "linked blocks of different sizes";
    return std::nullopt;
}

Failure prop_unlinked_middle(CaseContext& c) {
    const auto reps = class_representatives();
    const Span base = c.rng.below(2) ? reps[pick(c.rng, 0, reps.size() - 1)].second : random_split_algebra(c, 3);
    const BlockForm bf = unhinge(triangularize(base.conjugate(sample_invertible(3, c.cfg, c.index))));
    if (bf.blocks() != 3) return std::nullopt;
    const bool middle_alone = std::any_of(bf.linked_partition.begin(), bf.linked_partition.end(),
                                          [](const auto& g) { return g == std::vector<std::size_t>{1}; });
    if (!middle_alone) return std::nullopt;
    std::size_t total = 0;
    for (const auto& [key, dim] : radical_block_supports(bf)) total += dim;
    return fail_if(total != bf.radical.dim(), "radical is not the sum of its pair supports");
}

Failure prop_module_projection(CaseContext& c) {
    const std::size_t n = pick(c.rng, 2, 4);
    const Mat q = sample_projection(n, pick(c.rng, 1, n - 1), c.cfg, c.index);
    const Mat id = Mat::identity(n);
    if (find_module_projection(lr_algebra(id, q), Side::left) != q) return "left module projection differs";
    return fail_if(find_module_projection(lr_algebra(q, id), Side::right) != q, "right module projection differs");
}

Failure prop_classify_similarity(CaseContext& c) {
    const auto reps = class_representatives();
    const auto& [tag, rep] = reps[c.index % reps.size()];
    const ClassTag got = classify(rep.conjugate(sample_invertible(3, c.cfg, c.index))).tag;
    return fail_if(got != tag, to_string(tag) + " conjugate labelled " + to_string(got));
}

Failure prop_classify_transpose(CaseContext& c) {
    const Span a = random_split_algebra(c, 3);
    return fail_if(classify(a).tag != classify(span_transpose(a)).tag, "label changes under transposition");
}

Failure prop_classify_total(CaseContext& c) {
    const Span a = random_split_algebra(c, 3);
    const ClassLabel l = classify(a);
    if (l.compressible != is_compressible(l.tag)) return "compressible bit disagrees with the tag";
    if (!l.compressible) return std::nullopt;
    const CornerReport rep = falsify(a, Mode::projection, with_seed(c.cfg.seed + c.index, 10));
    return fail_if(rep.verdict == CornerReport::Verdict::counterexample,
                   to_string(l.tag) + " algebra has a non-closed projection corner");
}

struct Property {
    const char* name;
    Failure (*check)(CaseContext&);
};

const std::vector<Property>& properties() {
    static const std::vector<Property> all{
        {"matrix product is associative", prop_associativity},
        {"rref is idempotent", prop_rref_idempotent},
        {"inverse is two-sided", prop_inverse},
        {"anti-transpose involution and product reversal", prop_anti_transpose},
        {"conjugate transpose involution", prop_conj_transpose},
        {"closure idempotence", prop_closure},
        {"corner dimension bound", prop_compress_dim},
        {"transpose symmetry of corners", prop_transpose_symmetry},
        {"unitization per-corner monotonicity", prop_unitization},
        {"rank-one absorption", prop_rank_one_absorption},
        {"idempotents of the algebra give closed corners", prop_idempotent_in_algebra},
        {"rank-one corners are closed", prop_rank_one_corner},
        {"families are algebras", prop_families_closed},
        {"sampled idempotents and projections", prop_samplers},
        {"LR algebras absorb A E B", prop_lr_hypothesis},
        {"parametric families are unital of dimension 3", prop_parametric},
        {"counterexample soundness", prop_counterexample_soundness},
        {"compressible families have closed corners", prop_compressible_corners},
        {"certificates hold for admissible parameters", prop_certificates},
        {"rank-two dichotomy", prop_dichotomy},
        {"block sizes are similarity invariant", prop_triangularize_invariance},
        {"unhinged form splits as BD + Rad", prop_unhinged_sum},
        {"radical is nilpotent", prop_nilpotency},
        {"linked blocks have equal sizes", prop_linked_sizes},
        {"unlinked middle block splits the radical", prop_unlinked_middle},
        {"module projection round-trip", prop_module_projection},
        {"classification is similarity invariant", prop_classify_similarity},
        {"classification is transpose invariant", prop_classify_transpose},
        {"classification is total on split algebras", prop_classify_total},
    };
    return all;
}

}  // namespace

std::vector<std::string> property_names() {
    std::vector<std::string> out;
    for (const auto& p : properties()) out.emplace_back(p.name);
    return out;
}

PropertyResult run_property(const std::string& name, std::size_t cases, std::uint64_t seed) {
    const auto& all = properties();
    auto it = std::find_if(all.begin(), all.end(), [&](const Property& p) { return name == p.name; });
    if (it == all.end()) throw std::invalid_argument("unknown property: " + name);
    const auto id = static_cast<std::uint64_t>(it - all.begin()) + 1;
    PropertyResult res{name, 0, 0, ""};
    for (std::size_t i = 0; i < cases; ++i) {
        CaseContext c{Rng(seed, Stream::generator, id, 0, i), with_seed(seed), 100000 * id + i};
        Failure f;
        try {
            f = it->check(c);
        } catch (const std::exception& e) {
            f = std::string("exception: ") + e.what();
        }
        ++res.cases;
        if (f && res.failures++ == 0) res.first_failure = idx(*f, i);
    }
    return res;
}

CriterionResult run_criterion(int id, const SampleConfig& cfg) {
    cfg.validate();
    static const char* names[] = {"",
                                  "counterexample projection golden value",
                                  "class B certificates",
                                  "class C certificates",
                                  "class D certificates",
                                  "compressible family battery",
                                  "rank-two hypothesis dichotomy",
                                  "classifier round-trip",
                                  "structure suite",
                                  "property suites"};
    static const double budgets[] = {0, 1, 30, 10, 60, 600, 0, 0, 0, 0};
    if (id < 1 || id > 9) throw std::invalid_argument("criterion id must be in 1..9");
    CriterionResult res;
    res.id = id;
    res.name = names[id];
    res.budget_seconds = budgets[id];
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
        switch (id) {
            case 1: t = criterion_sec2(); break;
            case 2: t = criterion_thm_b(cfg); break;
            case 3: t = criterion_thm_c(cfg); break;
            case 4: t = criterion_thm_d(cfg); break;
            case 5: t = criterion_compressible(cfg); break;
            case 6: t = criterion_dichotomy(cfg); break;
            case 7: t = criterion_classifier(cfg); break;
            case 8: t = criterion_structure(cfg); break;
            case 9: t = criterion_properties(cfg.seed); break;
        }
    } catch (const std::exception& e) {
        t.record(false, std::string("exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.cases = t.cases;
    res.failures = t.failures;
    res.detail = t.failures ? t.detail : std::to_string(t.cases) + " checks";
    const bool in_time = res.budget_seconds == 0 || res.seconds < res.budget_seconds;
    if (!in_time && t.failures == 0) res.detail = "over the time budget";
    res.passed = t.failures == 0 && in_time;
    return res;
}

std::vector<CriterionResult> run_suite(const std::vector<int>& ids, const SampleConfig& cfg,
                                       const std::function<void(const CriterionResult&)>& on_done) {
    std::vector<int> todo = ids;
    if (todo.empty())
        for (int i = 1; i <= 9; ++i) todo.push_back(i);
    std::vector<CriterionResult> out;
    for (int id : todo) {
        out.push_back(run_criterion(id, cfg));
        if (on_done) on_done(out.back());
    }
    return out;
}

}  // namespace cornerlab
