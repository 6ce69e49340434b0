#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace stein {

using BitVector = std::vector<std::uint8_t>;
using BitMatrix = std::vector<BitVector>;  // row-major, entries 0 or 1

struct Gf2AffineSpace {
    bool consistent = false;
    BitVector particular;
    std::vector<BitVector> basis;  // of the homogeneous solution space

    std::size_t nullity() const { return basis.size(); }
    // All 2^nullity solutions, in Gray-code order starting from the particular one.
    std::vector<BitVector> enumerate() const;
};

// Solution set of A x = b over the field with two elements.  `cols` is needed
// when A has no rows.
Gf2AffineSpace solve_gf2_affine(const BitMatrix& a, const BitVector& b, std::size_t cols);

}  // namespace stein
