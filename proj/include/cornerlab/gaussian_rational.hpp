#pragma once

/**
 * @file gaussian_rational.hpp
 * @brief Exact complex scalars with rational real and imaginary parts.
 *
 * Every computation in the library runs over Q(i). Both components are
 * GMP rationals kept in canonical form (coprime, positive denominator),
 * so equality is structural and never needs a tolerance.
 */

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cornerlab {

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
    static GaussianRational fraction(long num, long den) { return GaussianRational(mpq_class(num, den)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, always a non-negative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    /// Multiplicative inverse; throws std::domain_error on zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        if (sgn(o.im_) != 0) im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        if (sgn(o.im_) != 0) im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Lexicographic (re, im) order. Only used for deterministic tie breaking.
    friend std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b);

    /// Text form "RE+IMi": "2/3-1/5i", "1", "-i", "3/2i".
    std::string to_string() const;
    /// Inverse of to_string; also accepts "i", "+3", "1/2i" and embedded
    /// whitespace. Throws std::invalid_argument.
    static GaussianRational parse(std::string_view text);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Parses a rational "p/q" or integer "p"; throws std::invalid_argument.
mpq_class parse_rational(std::string_view text);
std::string rational_to_string(const mpq_class& q);

}  // namespace cornerlab
