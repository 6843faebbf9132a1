#include "cornerlab/gaussian_rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace cornerlab {

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_real()) return GaussianRational(mpq_class(1) / re_);
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    // Most matrices in practice are real; skip the cross terms when possible.
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') pos = 1;
    bool slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t k = pos; k < text.size(); ++k) {
        char c = text[k];
        if (c == '/') {
            if (slash) throw std::invalid_argument("malformed rational: " + std::string(text));
            slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (slash ? digit_after : digit_before) = true;
        } else {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
    }
    if (!digit_before || (slash && !digit_after))
        throw std::invalid_argument("malformed rational: " + std::string(text));
    std::string s(text[0] == '+' ? text.substr(1) : text);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
    if (slash && sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    q.canonicalize();
    return q;
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string im_part;
    mpq_class mag = abs(im_);
    if (mag != 1) im_part = mag.get_str();
    im_part += "i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_part;
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + im_part;
}

GaussianRational GaussianRational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar");

    // Split into signed terms at '+'/'-' that are not leading.
    mpq_class re(0), im(0);
    bool seen_re = false, seen_im = false;
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t end = start + 1;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string_view term(s.data() + start, end - start);
        if (term == "+" || term == "-") throw std::invalid_argument("malformed scalar: " + s);
        if (term.back() == 'i') {
            if (seen_im) throw std::invalid_argument("malformed scalar: " + s);
            seen_im = true;
            std::string_view coeff = term.substr(0, term.size() - 1);
            if (coeff.empty() || coeff == "+")
                im = 1;
            else if (coeff == "-")
                im = -1;
            else
                im = parse_rational(coeff);
        } else {
            if (seen_re || seen_im) throw std::invalid_argument("malformed scalar: " + s);
            seen_re = true;
            re = parse_rational(term);
        }
        start = end;
    }
    return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace cornerlab
