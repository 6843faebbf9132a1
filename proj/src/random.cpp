#include "cornerlab/random.hpp"

#include <limits>
#include <stdexcept>

namespace cornerlab {

void SampleConfig::validate() const {
    if (count < 1) throw std::invalid_argument("sample count must be at least 1");
    if (entry_bound < 1) throw std::invalid_argument("entry bound must be at least 1");
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

std::uint64_t derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t n, std::uint64_t r,
                     std::uint64_t index) {
    std::uint64_t state = seed;
    std::uint64_t h = splitmix64(state);
    for (std::uint64_t part : {stream, n, r, index}) {
        state = h ^ part;
        h = splitmix64(state);
    }
    return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed, Stream stream, std::uint64_t n, std::uint64_t r, std::uint64_t index)
    : engine_(derive(seed, static_cast<std::uint64_t>(stream), n, r, index)) {}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty sampling range");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;  // accept [0, limit]
    std::uint64_t x;
    do x = engine_();
    while (x > limit);
    return x % bound;
}

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty sampling range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

mpq_class Rng::rational(long bound) {
    long p = uniform(-bound, bound);
    long q = uniform(1, bound);
    mpq_class v(p, q);
    v.canonicalize();
    return v;
}

mpq_class Rng::nonzero_rational(long bound) {
    mpq_class v;
    do v = rational(bound);
    while (sgn(v) == 0);
    return v;
}

GaussianRational Rng::gaussian(long bound) {
    mpq_class re = rational(bound);
    mpq_class im = rational(bound);
    return {re, im};
}

Mat Rng::matrix(std::size_t rows, std::size_t cols, long bound) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = gaussian(bound);
    return m;
}

}  // namespace cornerlab
