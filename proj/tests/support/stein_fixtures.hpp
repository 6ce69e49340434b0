#pragma once

#include "stein/invariants.hpp"
#include "support/gen.hpp"

namespace testgen {

using stein::SteinPresentation;

inline SteinPresentation single_knot(long long n, long long r) {
    SteinPresentation x;
    x.Q = IntMatrix{{n}};
    x.R = IntMatrix(0, 1);
    x.rot = {r};
    return x;
}

inline SteinPresentation handle_pair(long long p) {
    SteinPresentation x;
    x.n1 = 1;
    x.Q = IntMatrix{{0}};
    x.R = IntMatrix{{2 * p}};
    x.rot = {0};
    return x;
}

// An e-framed knot running algebraically zero times through each of 2g 1-handles.
inline SteinPresentation circle_bundle(long long g, long long e, long long r) {
    SteinPresentation x;
    x.n1 = static_cast<std::size_t>(2 * g);
    x.Q = IntMatrix{{e}};
    x.R = IntMatrix(x.n1, 1);
    x.rot = {r};
    return x;
}

inline ExtRational sign(long long n) { return ExtRational(n > 0 ? 1 : (n < 0 ? -1 : 0)); }

// Characteristic-sublink count straight from the definition, over all subsets.
inline std::size_t brute_force_sublinks(const IntMatrix& q) {
    const std::size_t n = q.rows();
    std::size_t count = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Integer sum = -q(i, i);
            for (std::size_t j = 0; j < n; ++j)
                if (mask >> j & 1u) sum += q(i, j);
            ok = boost::multiprecision::abs(sum) % 2 == 0;
        }
        count += ok;
    }
    return count;
}

}  // namespace testgen
