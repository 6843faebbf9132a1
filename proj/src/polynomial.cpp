#include "cornerlab/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace cornerlab {

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long degree(const Poly& p) {
    for (std::size_t k = p.size(); k > 0; --k)
        if (!p[k - 1].is_zero()) return static_cast<long>(k) - 1;
    return -1;
}

GaussianRational evaluate(const Poly& p, const GaussianRational& x) {
    GaussianRational acc;
    for (std::size_t k = p.size(); k > 0; --k) {
        acc *= x;
        acc += p[k - 1];
    }
    return acc;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * GaussianRational(static_cast<long>(k)));
    trim(d);
    return d;
}

std::pair<Poly, Poly> divide(const Poly& a, const Poly& b) {
    Poly r = a, d = b;
    trim(r);
    trim(d);
    if (d.empty()) throw std::domain_error("polynomial division by zero");
    if (r.size() < d.size()) return {Poly{}, r};
    Poly q(r.size() - d.size() + 1);
    const GaussianRational lead_inv = d.back().inverse();
    for (std::size_t k = q.size(); k > 0; --k) {
        const std::size_t shift = k - 1;
        GaussianRational c = r[shift + d.size() - 1] * lead_inv;
        q[shift] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= c * d[j];
    }
    trim(q);
    trim(r);
    return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divide(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    const GaussianRational inv = a.back().inverse();
    for (auto& c : a) c *= inv;
    return a;
}

Poly squarefree_part(const Poly& p) {
    Poly g = poly_gcd(p, derivative(p));
    if (degree(g) <= 0) {
        Poly out = p;
        trim(out);
        return out;
    }
    return divide(p, g).first;
}

Poly charpoly(const Mat& a) {
    if (!a.is_square()) throw std::invalid_argument("charpoly of non-square matrix");
    const std::size_t n = a.rows();
    Poly c(n + 1);
    c[n] = 1;
    Mat m(n, n);
    const Mat id = Mat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + id * c[n - k + 1];
        c[n - k] = -(a * m).trace() / GaussianRational(static_cast<long>(k));
    }
    return c;
}

namespace {

/// Complex number at a fixed working precision; binary operations keep the
/// larger precision of their operands.
struct Complex {
    mpf_class re, im;

    explicit Complex(unsigned long prec) : re(0, prec), im(0, prec) {}
    Complex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
    mpf_class d(b.re * b.re + b.im * b.im);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
mpf_class magnitude2(const Complex& a) { return a.re * a.re + a.im * a.im; }

Complex to_complex(const GaussianRational& z, unsigned long prec) {
    return {mpf_class(z.re(), prec), mpf_class(z.im(), prec)};
}

/// Continued-fraction rounding; nullopt when no convergent with denominator
/// at most max_den matches x to near working precision.
std::optional<mpq_class> rationalize(const mpf_class& x, unsigned long prec, const mpz_class& max_den) {
    const mpf_class tol(mpf_class(1, prec) >> (prec - 96), prec);
    mpz_class h_prev = 1, h = 0, k_prev = 0, k = 1;  // convergents h/k
    mpf_class rest(x, prec);
    for (unsigned long step = 0; step < 2 * prec; ++step) {
        mpf_class fl(floor(rest), prec);
        mpz_class a(fl);
        mpz_class h_next = a * h_prev + h;
        mpz_class k_next = a * k_prev + k;
        h = h_prev;
        k = k_prev;
        h_prev = h_next;
        k_prev = k_next;
        if (k_prev > max_den) return std::nullopt;
        mpq_class cand(h_prev, k_prev);
        cand.canonicalize();
        mpf_class err(x - mpf_class(cand, prec), prec);
        if (abs(err) <= tol) return cand;
        mpf_class frac(rest - fl, prec);
        if (frac == 0) return cand;
        rest = 1 / frac;
    }
    return std::nullopt;
}

std::vector<Complex> durand_kerner(const Poly& monic, unsigned long prec) {
    const std::size_t d = monic.size() - 1;
    std::vector<Complex> c;
    for (const auto& coeff : monic) c.push_back(to_complex(coeff, prec));
    mpf_class bound(1, prec);
    for (std::size_t k = 0; k < d; ++k) {
        mpf_class m(sqrt(magnitude2(c[k])), prec);
        if (m + 1 > bound) bound = m + 1;
    }
    std::vector<Complex> z(d, Complex(prec));
    const Complex seed(mpf_class(0.4, prec), mpf_class(0.9, prec));
    Complex power(mpf_class(1, prec), mpf_class(0, prec));
    for (std::size_t k = 0; k < d; ++k) {
        power = power * seed;
        z[k].re = power.re * bound;
        z[k].im = power.im * bound;
    }
    auto eval = [&](const Complex& x) {
        Complex acc(prec);
        for (std::size_t k = monic.size(); k > 0; --k) acc = acc * x + c[k - 1];
        return acc;
    };
    const mpf_class tiny(mpf_class(1, prec) >> (prec - 32), prec);
    for (int iter = 0; iter < 4000; ++iter) {
        mpf_class largest(0, prec);
        for (std::size_t i = 0; i < d; ++i) {
            Complex denom(mpf_class(1, prec), mpf_class(0, prec));
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) denom = denom * (z[i] - z[j]);
            if (magnitude2(denom) == 0) denom.re = tiny;
            Complex step = eval(z[i]) / denom;
            z[i] = z[i] - step;
            mpf_class s = magnitude2(step);
            if (s > largest) largest = s;
        }
        if (largest <= tiny * tiny) break;
    }
    return z;
}

/// Bit size of the largest coefficient after clearing denominators.
std::size_t integer_height_bits(const Poly& p) {
    mpz_class den = 1;
    for (const auto& c : p) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den_mpz_t());
    }
    std::size_t bits = 1;
    for (const auto& c : p)
        for (const mpq_class* part : {&c.re(), &c.im()}) {
            mpz_class v = part->get_num() * (den / part->get_den());
            bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
        }
    return bits;
}

}  // namespace

std::vector<GaussianRational> gaussian_rational_roots(const Poly& p) {
    Poly sf = squarefree_part(p);
    std::vector<GaussianRational> roots;
    const long d = degree(sf);
    if (d <= 0) return roots;
    const GaussianRational inv = sf.back().inverse();
    for (auto& c : sf) c *= inv;
    if (d == 1) {
        roots.push_back(-sf[0]);
        return roots;
    }
    // A root a/b has |a|, |b| <= H, so its parts have denominators <= H^2 (+1 bit for the norm).
    const std::size_t h = integer_height_bits(sf);
    const mpz_class max_den = mpz_class(1) << (2 * h + 2);
    const unsigned long prec = std::max<unsigned long>(512, 4 * h + 256);
    for (const Complex& z : durand_kerner(sf, prec)) {
        auto re = rationalize(z.re, prec, max_den);
        auto im = rationalize(z.im, prec, max_den);
        if (!re || !im) continue;
        GaussianRational cand(*re, *im);
        if (!evaluate(sf, cand).is_zero()) continue;
        if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
    }
    std::sort(roots.begin(), roots.end(),
              [](const GaussianRational& a, const GaussianRational& b) { return lex_compare(a, b) < 0; });
    return roots;
}

std::vector<GaussianRational> rational_eigenvalues(const Mat& a) { return gaussian_rational_roots(charpoly(a)); }

}  // namespace cornerlab
