#pragma once

#include "stein/rational.hpp"

#include <vector>

namespace stein {

// Terms a0, a1, ..., ak of a0 - 1/(a1 - 1/(... - 1/ak)) with a_j <= -2 for j >= 1.
struct ContinuedFraction {
    std::vector<Integer> terms;

    ExtRational evaluate() const;
    bool well_formed() const;
};

ContinuedFraction neg_continued_fraction(const ExtRational& r);

}  // namespace stein
