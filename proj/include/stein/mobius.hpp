#pragma once

#include "stein/rational.hpp"

namespace stein {

// Element [a b; c d] of PSL(2,Z) acting by r -> (c + d r)/(a + b r).
// Equivalently the matrix acts on homogeneous vectors (x, y) with r = y/x.
struct MobiusMap {
    Integer a = 1, b = 0, c = 0, d = 1;

    MobiusMap() = default;
    MobiusMap(Integer a_, Integer b_, Integer c_, Integer d_);

    static MobiusMap identity() { return {}; }

    ExtRational apply(const ExtRational& r) const;
    MobiusMap inverse() const;
    // Sign-normalized representative (first nonzero of a, b positive).
    MobiusMap canonical() const;

    friend MobiusMap operator*(const MobiusMap& x, const MobiusMap& y);
    friend bool operator==(const MobiusMap& x, const MobiusMap& y);

    std::string str() const;
};

inline ExtRational mobius_apply(const MobiusMap& A, const ExtRational& r) { return A.apply(r); }

}  // namespace stein
