#include "stein/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace stein {

std::vector<BitVector> Gf2AffineSpace::enumerate() const {
    std::vector<BitVector> out;
    if (!consistent) return out;
    if (basis.size() >= 32) throw std::length_error("too many GF(2) solutions to enumerate");
    BitVector x = particular;
    const std::size_t total = std::size_t{1} << basis.size();
    out.reserve(total);
    out.push_back(x);
    for (std::size_t step = 1; step < total; ++step) {
        std::size_t flip = 0;
        while (!((step >> flip) & 1U)) ++flip;
        for (std::size_t k = 0; k < x.size(); ++k) x[k] ^= basis[flip][k];
        out.push_back(x);
    }
    return out;
}

Gf2AffineSpace solve_gf2_affine(const BitMatrix& a, const BitVector& b, std::size_t cols) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_gf2_affine: length mismatch");
    BitMatrix m = a;
    BitVector rhs = b;
    for (auto& row : m) {
        if (row.size() != cols) throw std::invalid_argument("solve_gf2_affine: ragged matrix");
        for (auto& e : row) e &= 1U;
    }
    for (auto& e : rhs) e &= 1U;

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && !m[p][c]) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || !m[i][c]) continue;
            for (std::size_t k = c; k < cols; ++k) m[i][k] ^= m[r][k];
            rhs[i] ^= rhs[r];
        }
        pivots.push_back(c);
        ++r;
    }

    Gf2AffineSpace s;
    for (std::size_t i = r; i < m.size(); ++i)
        if (rhs[i]) return s;
    s.consistent = true;
    s.particular.assign(cols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) s.particular[pivots[i]] = rhs[i];

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = m[i][f];
        s.basis.push_back(std::move(v));
    }
    return s;
}

}  // namespace stein
