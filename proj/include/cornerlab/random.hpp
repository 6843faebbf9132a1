#pragma once

/**
 * @file random.hpp
 * @brief Seeded, platform-independent streams of exact random scalars and matrices.
 *
 * Every draw is addressed by (seed, stream, n, r, index). The address is
 * folded through splitmix64 into the seed of an mt19937_64 engine, and
 * integers are taken from the raw engine output by rejection sampling, so the
 * same address yields the same values on every platform.
 */

#include "cornerlab/matrix.hpp"

#include <cstdint>
#include <random>

namespace cornerlab {

struct SampleConfig {
    std::uint64_t seed = 0xC0FFEE;
    std::size_t count = 200;  ///< samples per rank
    long entry_bound = 5;     ///< bound on random numerators and denominators

    void validate() const;
};

inline constexpr const char* kPrngName = "mt19937_64 seeded by splitmix64(seed, stream, n, r, index)";

/// Named streams keep unrelated consumers of one seed independent.
enum class Stream : std::uint64_t {
    idempotent = 1,
    projection = 2,
    similarity = 3,
    parameter = 4,
    unitary = 5,
    generator = 6,
};

std::uint64_t splitmix64(std::uint64_t& state);

class Rng {
public:
    Rng(std::uint64_t seed, Stream stream, std::uint64_t n = 0, std::uint64_t r = 0, std::uint64_t index = 0);

    /// Uniform integer in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    /// p/q with p uniform in [-bound, bound] and q uniform in [1, bound].
    mpq_class rational(long bound);
    /// Like rational() but never zero.
    mpq_class nonzero_rational(long bound);
    GaussianRational gaussian(long bound);
    Mat matrix(std::size_t rows, std::size_t cols, long bound);

private:
    std::mt19937_64 engine_;
};

}  // namespace cornerlab
