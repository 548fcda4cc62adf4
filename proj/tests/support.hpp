#pragma once

// Shared test utilities: a deterministic RNG (identical across platforms)
// and small independent oracles the test suites check the library against.

#include "qla/matrix.hpp"
#include "qla/rational.hpp"

#include <cstdint>
#include <vector>

namespace testsupport {

// splitmix64; seeded explicitly in every test so runs are reproducible
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline qla::Rational rand_rational(Rng& rng, long num_abs, long den_max) {
    long num = rng.range(-num_abs, num_abs);
    long den = rng.range(1, den_max);
    return qla::Rational(num, den);
}

inline qla::QMat rand_matrix(Rng& rng, std::size_t r, std::size_t c, long num_abs = 4,
                             long den_max = 3) {
    qla::QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_rational(rng, num_abs, den_max);
    return m;
}

// Companion matrix of a monic polynomial p(t) = t^n + c_{n-1}t^{n-1} + ... + c_0,
// given as coefficient list c[0..n] with c[n] = 1. Its characteristic
// polynomial is p by construction -- the oracle for char_poly.
inline qla::QMat companion(const std::vector<qla::Rational>& coeffs) {
    const std::size_t n = coeffs.size() - 1;
    qla::QMat m(n, n);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -coeffs[i];
    return m;
}

}  // namespace testsupport
