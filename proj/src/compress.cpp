#include "cornerlab/compress.hpp"

#include "cornerlab/linalg.hpp"

#include <array>

namespace cornerlab {

std::string to_string(Mode m) { return m == Mode::projection ? "projection" : "idempotent"; }

Mode parse_mode(const std::string& text) {
    if (text == "projection") return Mode::projection;
    if (text == "idempotent") return Mode::idempotent;
    throw PreconditionError("mode must be 'projection' or 'idempotent', got '" + text + "'");
}

std::string to_string(CornerReport::Verdict v) {
    return v == CornerReport::Verdict::counterexample ? "counterexample" : "no-counterexample-found";
}

std::string to_string(Hypothesis h) {
    switch (h) {
        case Hypothesis::eq2e_membership: return "EQ2E-membership";
        case Hypothesis::eq1_fixed: return "EQ1-fixed";
        case Hypothesis::eq1e_membership: return "EQ1E-membership";
    }
    return "?";
}

std::optional<GaussianRational> idempotent_scale(const Mat& e) {
    if (!e.is_square()) return std::nullopt;
    if (e.is_zero()) return GaussianRational(1);
    Mat sq = e * e;
    auto ent = e.entries();
    std::size_t k = 0;
    while (ent[k].is_zero()) ++k;
    GaussianRational lambda = sq.entries()[k] / ent[k];
    if (lambda.is_zero() || sq != e * lambda) return std::nullopt;
    return lambda;
}

void check_compressor(const Mat& e, Mode mode) {
    auto lambda = idempotent_scale(e);
    if (!lambda) throw PreconditionError("compressor is not a multiple of an idempotent");
    if (mode == Mode::projection && (!lambda->is_real() || e.conj_transpose() != e))
        throw PreconditionError("compressor is not a multiple of an orthogonal projection");
}

bool corner_is_algebra(const Span& s, const Mat& e, Mode mode) {
    check_compressor(e, mode);
    return s.compress(e).is_mult_closed();
}

CornerReport falsify(const Span& s, Mode mode, const SampleConfig& cfg) {
    cfg.validate();
    if (!s.is_square()) throw PreconditionError("falsify needs a square ambient space");
    const std::size_t n = s.n();
    CornerReport report;
    for (std::size_t r = 2; r + 1 <= n; ++r) {
        for (std::size_t idx = 0; idx < cfg.count; ++idx) {
            RankFactors f = mode == Mode::projection ? sample_projection_factors(n, r, cfg, idx)
                                                     : sample_idempotent_factors(n, r, cfg, idx);
            ++report.samples_used;
            // y A x is isomorphic to the corner E A E with E = x y.
            Span small = s.sandwich(f.y, f.x);
            if (auto esc = small.escaping_product()) {
                report.verdict = CornerReport::Verdict::counterexample;
                report.witness_product = f.x * (small.basis()[esc->first] * small.basis()[esc->second]) * f.y;
                report.witness_e = f.product();
                report.witness_rank = r;
                return report;
            }
        }
    }
    return report;
}

bool AffineForm::is_constant() const {
    for (std::size_t k = 1; k < c.size(); ++k)
        if (!c[k].is_zero()) return false;
    return true;
}

AffineForm AffineForm::substitute(std::size_t var, const AffineForm& value) const {
    AffineForm out = *this;
    const GaussianRational w = c.at(var);
    out.c[var] = GaussianRational();
    return out + w * value;
}

AffineForm AffineForm::solve_for(std::size_t var) const {
    const GaussianRational w = c.at(var);
    if (w.is_zero()) throw InternalError("cannot solve an affine form for an absent unknown");
    AffineForm rest = *this;
    rest.c[var] = GaussianRational();
    return GaussianRational(-1) / w * rest;
}

AffineForm operator+(const AffineForm& a, const AffineForm& b) {
    AffineForm out = a;
    for (std::size_t k = 0; k < b.c.size(); ++k) out.c.at(k) += b.c[k];
    return out;
}

AffineForm operator-(const AffineForm& a, const AffineForm& b) { return a + GaussianRational(-1) * b; }

AffineForm operator*(const GaussianRational& s, const AffineForm& a) {
    AffineForm out = a;
    for (auto& x : out.c) x *= s;
    return out;
}

namespace {

using G = GaussianRational;

AffineForm constant_form(std::size_t unknowns, const G& value) {
    AffineForm f{std::vector<G>(unknowns + 1)};
    f.c[0] = value;
    return f;
}

AffineForm var_form(std::size_t unknowns, std::size_t var, const G& coeff = G(1)) {
    AffineForm f{std::vector<G>(unknowns + 1)};
    f.c.at(var) = coeff;
    return f;
}

/// Entries of G = PAPBP - P C P with C = sum_v u_v directions[v - 1], as affine forms.
class Residual {
public:
    Residual(const Mat& p, const Mat& a, const Mat& b, const std::vector<Mat>& directions)
        : k_(directions.size()), constant_(p * a * p * b * p) {
        for (const auto& d : directions) parts_.push_back(-(p * d * p));
    }

    /// 1-based entry g_ij.
    AffineForm g(std::size_t i, std::size_t j) const {
        AffineForm f = constant_form(k_, constant_(i - 1, j - 1));
        for (std::size_t v = 0; v < k_; ++v) f.c[v + 1] = parts_[v](i - 1, j - 1);
        return f;
    }

private:
    std::size_t k_;
    Mat constant_;
    std::vector<Mat> parts_;
};

IdentityCheck make_check(std::string name, AffineForm lhs, AffineForm rhs) {
    IdentityCheck c{std::move(name), std::move(lhs), std::move(rhs), false};
    c.holds = c.lhs == c.rhs;
    return c;
}

bool all_hold(const std::vector<IdentityCheck>& checks) {
    for (const auto& c : checks)
        if (!c.holds) return false;
    return true;
}

/// Scale lambda with P^2 = lambda P and P = P^*, or PreconditionError.
G projection_scale_of(const Mat& p) {
    auto lambda = idempotent_scale(p);
    if (!lambda || !lambda->is_real() || p.conj_transpose() != p)
        throw InternalError("certificate matrix is not a multiple of a projection");
    return *lambda;
}

/// (PAP)(PBP) against P A P, decided by plain span membership.
bool product_in_corner(const Span& algebra, const Mat& p, const Mat& a, const Mat& b) {
    return algebra.compress(p).contains((p * a * p) * (p * b * p));
}

void finish(Certificate& cert, const Span& algebra) {
    cert.member = product_in_corner(algebra, cert.p, cert.a, cert.b);
    const bool identities = all_hold(cert.checks) && !cert.identity_rhs.is_zero();
    if (identities && cert.member)
        throw InternalError("certificate identities hold but the product lies in the corner");
    cert.verified = identities && !cert.member;
}

}  // namespace

CertificateB certify_B(const G& s, const G& t, const G& k) {
    if (!k.is_real()) throw PreconditionError("k must be real");
    if (k.is_zero() || k == s || k == t) throw PreconditionError("k must avoid {0, s, t}");
    CertificateB cert;
    cert.s = s;
    cert.t = t;
    cert.k = k;
    const G k2 = k * k;
    cert.p = Mat{{k2 + 1, -k, -1}, {-k, 2, -k}, {-1, -k, k2 + 1}};
    cert.a = B_st_element(s, t, 1, 0, 0);
    cert.b = Mat::unit(3, 3, 0, 2);
    cert.projection_scale = projection_scale_of(cert.p);
    cert.unknowns = {"alpha", "beta", "x"};
    const std::size_t nu = 3;
    Residual g(cert.p, cert.a, cert.b,
               {B_st_element(s, t, 1, 0, 0), B_st_element(s, t, 0, 1, 0), B_st_element(s, t, 0, 0, 1)});

    // g31 = 0 fixes x.
    AffineForm x0 = g.g(3, 1).solve_for(3);
    const G w = k * (G(2) * k - s - t);
    AffineForm expected_x0 = constant_form(nu, w + 2) + var_form(nu, 1, w + 2) + var_form(nu, 2, k2 - w);
    cert.checks.push_back(make_check("x0 from g31 = 0", x0, expected_x0));

    AffineForm lhs = (k - s) * g.g(1, 1).substitute(3, x0) - (k - t) * g.g(3, 3).substitute(3, x0);
    AffineForm rhs = constant_form(nu, k * (k2 + 2) * (k - s) * (k - t));
    cert.checks.push_back(make_check("(k-s)g11 - (k-t)g33", lhs, rhs));
    cert.identity_lhs = lhs.constant();
    cert.identity_rhs = rhs.constant();
    finish(cert, B_st(s, t));
    return cert;
}

CertificateC certify_C(const G& r) {
    if (r.is_zero()) throw PreconditionError("r must be nonzero");
    CertificateC cert;
    cert.r = r;
    cert.p = Mat{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
    cert.a = Mat{{0, 1, 0}, {0, 0, r}, {0, 0, 0}};
    cert.b = Mat::unit(3, 3, 0, 2);
    cert.projection_scale = projection_scale_of(cert.p);
    cert.unknowns = {"alpha", "x", "y"};
    const std::size_t nu = 3;
    Residual g(cert.p, cert.a, cert.b, {Mat::identity(3), cert.a, Mat::unit(3, 3, 0, 2)});

    // g31 = 0 fixes y = 3 alpha - (x + 1)(r + 1).
    AffineForm y0 = g.g(3, 1).solve_for(3);
    AffineForm expected_y0 = constant_form(nu, -(r + 1)) + var_form(nu, 1, 3) + var_form(nu, 2, -(r + 1));
    cert.checks.push_back(make_check("y0 from g31 = 0", y0, expected_y0));

    AffineForm lhs = g.g(2, 1).substitute(3, y0) - r * g.g(3, 2).substitute(3, y0);
    AffineForm rhs = constant_form(nu, G(3) * r);
    cert.checks.push_back(make_check("g21 - r g32", lhs, rhs));
    cert.identity_lhs = lhs.constant();
    cert.identity_rhs = rhs.constant();
    finish(cert, C_r(r));
    return cert;
}

std::vector<std::string> certify_D_violations(const G& r, const G& s, const G& t, const G& k, const G& m) {
    std::vector<std::string> out;
    if (!k.is_real() || k.is_zero()) out.push_back("k must be a nonzero real");
    if (!m.is_real() || m.is_zero()) out.push_back("m must be a nonzero real");
    if (t * k == G(1)) out.push_back("tk = 1");
    if (r * m == G(1)) out.push_back("rm = 1");
    if (s * k + m == -r) out.push_back("sk + m = -r");
    if (k - (r * t + s) * m == -t) out.push_back("k - (rt + s)m = -t");
    return out;
}

G default_k_for_B(const G& s, const G& t) {
    for (long k = 1;; ++k)
        if (G(k) != s && G(k) != t) return G(k);
}

std::optional<std::pair<G, G>> default_km_for_D(const G& r, const G& s, const G& t) {
    std::vector<G> values;
    for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {3, 2}, {2, 3}}) {
        values.push_back(G::fraction(p, q));
        values.push_back(G::fraction(-p, q));
    }
    for (const auto& k : values)
        for (const auto& m : values)
            if (certify_D_violations(r, s, t, k, m).empty()) return std::pair{k, m};
    return std::nullopt;
}

CertificateD certify_D(const G& r, const G& s, const G& t, const G& k, const G& m) {
    auto bad = certify_D_violations(r, s, t, k, m);
    if (!bad.empty()) {
        std::string msg = "certify_D preconditions violated:";
        for (const auto& b : bad) msg += " [" + b + "]";
        throw PreconditionError(msg);
    }
    CertificateD cert;
    cert.r = r;
    cert.s = s;
    cert.t = t;
    cert.k = k;
    cert.m = m;
    const G k2 = k * k, m2 = m * m, q = k2 + m2 + 1;
    cert.p = Mat{{k2 + 1, -m, -m * k}, {-m, k2 + m2, -k}, {-m * k, -k, m2 + 1}};
    cert.a = D_rst_element(r, s, t, 1, 0, 0);
    cert.b = D_rst_element(r, s, t, 0, 1, 0);
    cert.projection_scale = projection_scale_of(cert.p);
    cert.unknowns = {"alpha", "beta", "gamma"};
    const std::size_t nu = 3;
    Residual g(cert.p, cert.a, cert.b,
               {D_rst_element(r, s, t, 1, 0, 0), D_rst_element(r, s, t, 0, 1, 0), D_rst_element(r, s, t, 0, 0, 1)});

    // g31 - k g21 is a nonzero multiple of beta - gamma.
    const G f1 = k * m * q * (t * k - 1);
    AffineForm lhs1 = g.g(3, 1) - k * g.g(2, 1);
    cert.checks.push_back(make_check("g31 - k g21", lhs1, var_form(nu, 2, f1) + var_form(nu, 3, -f1)));

    // With gamma = beta, k g23 - g33 is a nonzero multiple of beta.
    AffineForm beta = var_form(nu, 2);
    AffineForm lhs2 = (k * g.g(2, 3) - g.g(3, 3)).substitute(3, beta);
    cert.checks.push_back(make_check("k g23 - g33 at gamma = beta", lhs2, var_form(nu, 2, q * q)));

    // With beta = gamma = 0 the last combination is a nonzero constant.
    AffineForm zero = constant_form(nu, G());
    auto at_zero = [&](const AffineForm& f) { return f.substitute(2, zero).substitute(3, zero); };
    AffineForm lhs3 = (r * (k2 + m2) - s * k - m) * at_zero(g.g(2, 1)) -
                      (k2 - s * k * m - r * m + 1) * at_zero(g.g(2, 2));
    AffineForm rhs3 = constant_form(nu, k * m * q * (r * m - 1) * (s * k + m + r) * (k - (r * t + s) * m + t));
    cert.checks.push_back(make_check("(r(k^2+m^2)-sk-m)g21 - (k^2-skm-rm+1)g22 at beta = gamma = 0", lhs3, rhs3));
    cert.identity_lhs = lhs3.constant();
    cert.identity_rhs = rhs3.constant();
    if (f1.is_zero() || q.is_zero()) throw InternalError("forcing coefficient vanished");
    finish(cert, D_rst(r, s, t));
    return cert;
}

Section2Report repro_section2() {
    Section2Report rep;
    rep.p = Mat{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
    const Mat q12 = Mat{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}};
    std::vector<Mat> gens{q12};
    const Span algebra = Span::from(gens, 3, 3);
    const Span corner = algebra.compress(rep.p);

    auto relation = [](const Mat& b) { return b(1, 1) + G(5) * b(1, 2); };
    rep.relation_on_corner = true;
    for (const auto& b : corner.basis())
        if (!relation(b).is_zero()) rep.relation_on_corner = false;

    rep.generator = rep.p * q12 * rep.p;
    rep.square = rep.generator * rep.generator;
    rep.expected_square = Mat{{42, -39, -3}, {-39, 42, -3}, {-3, -3, 6}};
    rep.square_matches = rep.square == rep.expected_square;
    rep.square_relation = relation(rep.square);
    rep.square_in_corner = corner.contains(rep.square);
    rep.projection_compressible = corner_is_algebra(algebra, rep.p, Mode::projection);
    rep.verified = rep.relation_on_corner && relation(rep.generator).is_zero() && rep.square_matches &&
                   !rep.square_relation.is_zero() && !rep.square_in_corner && !rep.projection_compressible;
    return rep;
}

bool lemma_precondition_check(const Family& f, const Mat& e, Hypothesis which) {
    if (!f.triple) throw PreconditionError("family " + f.name + " carries no projection triple");
    if (!is_idempotent(e) || e.rows() != f.triple->n()) throw PreconditionError("e must be an idempotent of matching size");
    const auto& t = *f.triple;
    switch (which) {
        case Hypothesis::eq1_fixed: return e * t.q1 == t.q1;
        case Hypothesis::eq2e_membership: return f.algebra.compress(e).contains(e * t.q2 * e);
        case Hypothesis::eq1e_membership: return f.algebra.compress(e).contains(e * t.q1 * e);
    }
    return false;
}

}  // namespace cornerlab
