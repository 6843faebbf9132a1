#include "cornerlab/span.hpp"

#include "cornerlab/linalg.hpp"

#include <stdexcept>

namespace cornerlab {

Span::Span(std::size_t n, std::size_t p) : n_(n), p_(p) {
    if (n == 0 || p == 0) throw std::invalid_argument("span ambient dimensions must be positive");
}

Span::Span(std::size_t n, std::size_t p, std::vector<Mat> basis, std::vector<std::size_t> pivots)
    : n_(n), p_(p), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Span Span::from(std::span<const Mat> generators, std::size_t n, std::size_t p) {
    Span zero(n, p);
    std::vector<const Mat*> live;
    for (const auto& g : generators) {
        if (g.rows() != n || g.cols() != p) throw std::invalid_argument("span generator has the wrong shape");
        if (!g.is_zero()) live.push_back(&g);
    }
    if (live.empty()) return zero;

    const std::size_t len = n * p;
    Mat stacked(live.size(), len);
    for (std::size_t k = 0; k < live.size(); ++k) {
        auto e = live[k]->entries();
        for (std::size_t j = 0; j < len; ++j) stacked(k, j) = e[j];
    }
    RrefResult r = rref(stacked);
    std::vector<Mat> basis;
    basis.reserve(r.rank);
    for (std::size_t k = 0; k < r.rank; ++k) {
        std::vector<GaussianRational> row(len);
        for (std::size_t j = 0; j < len; ++j) row[j] = r.form(k, j);
        basis.emplace_back(n, p, std::move(row));
    }
    return Span(n, p, std::move(basis), std::move(r.pivots));
}

Span Span::from(std::span<const Mat> generators) {
    if (generators.empty()) throw std::invalid_argument("empty generator list with no declared shape");
    return from(generators, generators.front().rows(), generators.front().cols());
}

Span Span::full(std::size_t n, std::size_t p) {
    std::vector<Mat> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) units.push_back(Mat::unit(n, p, i, j));
    return from(units, n, p);
}

Span Span::scalars(std::size_t n) {
    std::vector<Mat> g{Mat::identity(n)};
    return from(g, n, n);
}

void Span::require_square(const char* op) const {
    if (n_ != p_) throw std::invalid_argument(std::string(op) + " requires a square ambient space");
}

Mat Span::reduce(const Mat& m) const {
    if (m.rows() != n_ || m.cols() != p_) throw std::invalid_argument("shape mismatch in span membership");
    Mat v = m;
    auto out = v.entries();
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const GaussianRational c = out[pivots_[k]];
        if (c.is_zero()) continue;
        auto row = basis_[k].entries();
        for (std::size_t j = pivots_[k]; j < row.size(); ++j)
            if (!row[j].is_zero()) out[j] -= c * row[j];
    }
    return v;
}

bool Span::contains(const Mat& m) const { return reduce(m).is_zero(); }

std::optional<std::vector<GaussianRational>> Span::coordinates(const Mat& m) const {
    if (!contains(m)) return std::nullopt;
    // rref rows carry a 1 at their own pivot and 0 at every other pivot.
    std::vector<GaussianRational> c(basis_.size());
    auto e = m.entries();
    for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = e[pivots_[k]];
    return c;
}

bool Span::contains(const Span& other) const {
    if (other.n_ != n_ || other.p_ != p_) throw std::invalid_argument("shape mismatch in span inclusion");
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> Span::escaping_product() const {
    require_square("multiplicative closure test");
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < basis_.size(); ++j)
            if (!contains(basis_[i] * basis_[j])) return std::make_pair(i, j);
    return std::nullopt;
}

bool Span::is_mult_closed() const { return !escaping_product().has_value(); }

Span Span::closure() const {
    require_square("closure");
    Span cur = *this;
    while (true) {
        std::vector<Mat> gens = cur.basis_;
        const std::size_t before = gens.size();
        for (std::size_t i = 0; i < before; ++i)
            for (std::size_t j = 0; j < before; ++j) {
                Mat prod = cur.basis_[i] * cur.basis_[j];
                if (!cur.contains(prod)) gens.push_back(std::move(prod));
            }
        if (gens.size() == before) return cur;
        cur = from(gens, n_, p_);
    }
}

Span Span::compress(const Mat& e) const {
    if (!e.is_square() || e.rows() != n_ || n_ != p_) throw std::invalid_argument("compress: shape mismatch");
    return sandwich(e, e);
}

Span Span::sandwich(const Mat& left, const Mat& right) const {
    if (left.cols() != n_ || right.rows() != p_) throw std::invalid_argument("sandwich: shape mismatch");
    std::vector<Mat> gens;
    gens.reserve(basis_.size());
    for (const auto& b : basis_) gens.push_back(left * b * right);
    return from(gens, left.rows(), right.cols());
}

Span Span::unitize() const {
    require_square("unitize");
    std::vector<Mat> gens = basis_;
    gens.push_back(Mat::identity(n_));
    return from(gens, n_, p_);
}

Span Span::transpose() const {
    std::vector<Mat> gens;
    for (const auto& b : basis_) gens.push_back(b.transpose());
    return from(gens, p_, n_);
}

Span Span::anti_transpose() const {
    require_square("anti-transpose");
    std::vector<Mat> gens;
    for (const auto& b : basis_) gens.push_back(b.anti_transpose());
    return from(gens, n_, p_);
}

Span Span::conjugate(const Mat& s) const { return conjugate(s, inverse(s)); }

Span Span::conjugate(const Mat& s, const Mat& s_inverse) const {
    require_square("conjugation");
    return sandwich(s_inverse, s);
}

Span Span::operator+(const Span& other) const {
    if (other.n_ != n_ || other.p_ != p_) throw std::invalid_argument("shape mismatch in span sum");
    std::vector<Mat> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return from(gens, n_, p_);
}

Span Span::intersect(const Span& other) const {
    if (other.n_ != n_ || other.p_ != p_) throw std::invalid_argument("shape mismatch in span intersection");
    if (basis_.empty() || other.basis_.empty()) return Span(n_, p_);
    // Solve sum x_i a_i - sum y_j b_j = 0 and map the x part back.
    const std::size_t len = n_ * p_;
    const std::size_t da = basis_.size(), db = other.basis_.size();
    Mat system(len, da + db);
    for (std::size_t k = 0; k < da; ++k) {
        auto e = basis_[k].entries();
        for (std::size_t j = 0; j < len; ++j) system(j, k) = e[j];
    }
    for (std::size_t k = 0; k < db; ++k) {
        auto e = other.basis_[k].entries();
        for (std::size_t j = 0; j < len; ++j) system(j, da + k) = -e[j];
    }
    std::vector<Mat> gens;
    for (const auto& v : kernel(system)) {
        Mat m(n_, p_);
        for (std::size_t k = 0; k < da; ++k)
            if (!v(k, 0).is_zero()) m += basis_[k] * v(k, 0);
        gens.push_back(std::move(m));
    }
    return from(gens, n_, p_);
}

}  // namespace cornerlab
