#pragma once

#include "stein/matrix.hpp"
#include "stein/rational.hpp"

#include <cstdint>
#include <random>

namespace testgen {

using stein::ExtRational;
using stein::IntMatrix;
using stein::Integer;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long long range(long long lo, long long hi) {  // inclusive
        return std::uniform_int_distribution<long long>(lo, hi)(rng_);
    }
    bool coin() { return range(0, 1) == 1; }
    std::mt19937_64& engine() { return rng_; }

    ExtRational rational(long long max_num, long long max_den) {
        long long q = range(1, max_den);
        long long p = range(-max_num, max_num);
        return ExtRational(Integer(p), Integer(q));
    }

    ExtRational nonzero_rational(long long max_num, long long max_den) {
        for (;;) {
            auto r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    IntMatrix matrix(std::size_t rows, std::size_t cols, long long bound) {
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = range(-bound, bound);
        return m;
    }

    IntMatrix symmetric(std::size_t n, long long bound) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Integer(range(-bound, bound));
        return m;
    }

    // Product of a few random elementary matrices; determinant +-1 by construction.
    IntMatrix unimodular(std::size_t n, int steps = 8) {
        IntMatrix u = IntMatrix::identity(n);
        if (n == 0) return u;
        for (int s = 0; s < steps; ++s) {
            std::size_t i = static_cast<std::size_t>(range(0, static_cast<long long>(n) - 1));
            std::size_t j = static_cast<std::size_t>(range(0, static_cast<long long>(n) - 1));
            int kind = static_cast<int>(range(0, 2));
            if (kind == 0 && i != j) {
                Integer q = range(-2, 2);
                for (std::size_t c = 0; c < n; ++c) u(i, c) += q * u(j, c);
            } else if (kind == 1 && i != j) {
                for (std::size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
            } else {
                for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
            }
        }
        return u;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace testgen
