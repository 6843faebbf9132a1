#pragma once

/**
 * @file compress.hpp
 * @brief Corner tests, sampling-based falsification and exact certificates
 * of non-compressibility.
 *
 * falsify() only ever proves a negative: finding no counterexample says
 * nothing about the remaining idempotents. The certificates replay a fixed
 * projection argument symbolically, treating the unknown algebra element C
 * as an affine form in its parameters, so each identity is checked for every
 * parameter value at once.
 */

#include "cornerlab/errors.hpp"
#include "cornerlab/generators.hpp"
#include "cornerlab/span.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cornerlab {

enum class Mode { projection, idempotent };

std::string to_string(Mode m);
/// Throws PreconditionError on anything but "projection" or "idempotent".
Mode parse_mode(const std::string& text);

/// The lambda with e^2 = lambda e, or nullopt if e is not a nonzero multiple
/// of an idempotent. The zero matrix reports lambda = 1.
std::optional<GaussianRational> idempotent_scale(const Mat& e);

/// Throws PreconditionError unless e is a nonzero multiple of an idempotent
/// (and self-adjoint, for Mode::projection).
void check_compressor(const Mat& e, Mode mode);

/// is_mult_closed(compress(s, e)) after the structural check on e.
bool corner_is_algebra(const Span& s, const Mat& e, Mode mode);

struct CornerReport {
    enum class Verdict { no_counterexample_found, counterexample };

    Verdict verdict = Verdict::no_counterexample_found;
    std::optional<Mat> witness_e;
    std::optional<Mat> witness_product;
    std::size_t witness_rank = 0;
    std::size_t samples_used = 0;
};

std::string to_string(CornerReport::Verdict v);

/// Tries cfg.count samples for every rank 2..n-1 and stops at the first
/// corner that is not multiplicatively closed.
CornerReport falsify(const Span& s, Mode mode, const SampleConfig& cfg);

/// Affine function c[0] + c[1] u_1 + ... + c[k] u_k of k unknowns.
struct AffineForm {
    std::vector<GaussianRational> c;

    bool is_constant() const;
    GaussianRational constant() const { return c.front(); }
    const GaussianRational& coeff(std::size_t var) const { return c.at(var); }
    /// Replaces unknown var by the form value.
    AffineForm substitute(std::size_t var, const AffineForm& value) const;
    /// Solves *this = 0 for unknown var; throws InternalError if its coefficient is zero.
    AffineForm solve_for(std::size_t var) const;

    friend AffineForm operator+(const AffineForm& a, const AffineForm& b);
    friend AffineForm operator-(const AffineForm& a, const AffineForm& b);
    friend AffineForm operator*(const GaussianRational& s, const AffineForm& a);
    friend bool operator==(const AffineForm& a, const AffineForm& b) = default;
};

/// One entry of a certificate: a named combination of entries of G and the
/// closed form it must equal.
struct IdentityCheck {
    std::string name;
    AffineForm lhs;
    AffineForm rhs;
    bool holds = false;
};

/// Common part of the three certificates. G = PAPBP - PCP where C runs over
/// the algebra; unknowns are named in `unknowns`.
struct Certificate {
    Mat a = Mat(1, 1), b = Mat(1, 1), p = Mat(1, 1);
    GaussianRational projection_scale;  ///< P^2 = scale * P
    std::vector<std::string> unknowns;
    std::vector<IdentityCheck> checks;
    GaussianRational identity_lhs, identity_rhs;  ///< final contradiction identity
    bool member = true;  ///< (PAP)(PBP) in P A P, decided directly
    bool verified = false;
};

struct CertificateB : Certificate {
    GaussianRational s, t, k;
};
struct CertificateC : Certificate {
    GaussianRational r;
};
struct CertificateD : Certificate {
    GaussianRational r, s, t, k, m;
};

/// Preconditions: k real, k not in {0, s, t}.
CertificateB certify_B(const GaussianRational& s, const GaussianRational& t, const GaussianRational& k);
/// Precondition: r != 0.
CertificateC certify_C(const GaussianRational& r);
/// Preconditions: k, m real and nonzero, tk != 1, rm != 1, sk + m != -r,
/// k - (rt + s)m != -t. Every violated condition is listed in the error.
CertificateD certify_D(const GaussianRational& r, const GaussianRational& s, const GaussianRational& t,
                       const GaussianRational& k, const GaussianRational& m);

/// The four violated constraints of certify_D, empty when (k, m) is admissible.
std::vector<std::string> certify_D_violations(const GaussianRational& r, const GaussianRational& s,
                                              const GaussianRational& t, const GaussianRational& k,
                                              const GaussianRational& m);

/// Smallest positive integer outside {s, t}.
GaussianRational default_k_for_B(const GaussianRational& s, const GaussianRational& t);
/// First (k, m) admissible for certify_D in a fixed row-major scan of the
/// values +-1, +-2, +-1/2, +-3, +-1/3, +-3/2, +-2/3.
std::optional<std::pair<GaussianRational, GaussianRational>> default_km_for_D(const GaussianRational& r,
                                                                             const GaussianRational& s,
                                                                             const GaussianRational& t);

struct Section2Report {
    Mat p = Mat(1, 1);
    Mat generator = Mat(1, 1);  ///< P (Q1 + Q2) P
    Mat square = Mat(1, 1);     ///< its square
    Mat expected_square = Mat(1, 1);
    bool relation_on_corner = false;  ///< b22 + 5 b23 = 0 on every corner basis element
    bool square_matches = false;
    GaussianRational square_relation;  ///< b22 + 5 b23 evaluated on the square
    bool square_in_corner = true;
    bool projection_compressible = true;
    bool verified = false;
};

Section2Report repro_section2();

enum class Hypothesis { eq2e_membership, eq1_fixed, eq1e_membership };

std::string to_string(Hypothesis h);

/// Evaluates one corner hypothesis for an idempotent e; throws
/// PreconditionError when the family carries no projection triple.
bool lemma_precondition_check(const Family& f, const Mat& e, Hypothesis which);

}  // namespace cornerlab
