#include "stein/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace stein {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = ExtRational(m(i, j));
    return r;
}

IntMatrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
    return d;
}

std::size_t SmithForm::rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& x) { return x != 0; }));
}

namespace {

class SnfWorker {
public:
    explicit SnfWorker(const IntMatrix& m)
        : D(m), U(IntMatrix::identity(m.rows())), V(IntMatrix::identity(m.cols())),
          Ui(IntMatrix::identity(m.rows())), Vi(IntMatrix::identity(m.cols())) {}

    IntMatrix D, U, V, Ui, Vi;

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(i, j), D(k, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(i, j), U(k, j));
        for (std::size_t j = 0; j < Ui.rows(); ++j) std::swap(Ui(j, i), Ui(j, k));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, j), D(i, k));
        for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, j), V(i, k));
        for (std::size_t i = 0; i < Vi.cols(); ++i) std::swap(Vi(j, i), Vi(k, i));
    }
    // row_i += q * row_k
    void add_row(std::size_t i, std::size_t k, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < D.cols(); ++j) D(i, j) += q * D(k, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(i, j) += q * U(k, j);
        for (std::size_t j = 0; j < Ui.rows(); ++j) Ui(j, k) -= q * Ui(j, i);
    }
    // col_j += q * col_k
    void add_col(std::size_t j, std::size_t k, const Integer& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < D.rows(); ++i) D(i, j) += q * D(i, k);
        for (std::size_t i = 0; i < V.rows(); ++i) V(i, j) += q * V(i, k);
        for (std::size_t i = 0; i < Vi.cols(); ++i) Vi(k, i) -= q * Vi(j, i);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < D.cols(); ++j) D(i, j) = -D(i, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(i, j) = -U(i, j);
        for (std::size_t j = 0; j < Ui.rows(); ++j) Ui(j, i) = -Ui(j, i);
    }

    bool place_pivot(std::size_t t) {
        std::size_t pi = 0, pj = 0;
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < D.rows(); ++i)
            for (std::size_t j = t; j < D.cols(); ++j) {
                if (D(i, j) == 0) continue;
                Integer a = abs(D(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) return false;
        swap_cols(t, pj);
        swap_rows(t, pi);
        return true;
    }

    void reduce(std::size_t t) {
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < D.rows(); ++i) {
                while (D(i, t) != 0) {
                    add_row(i, t, -(D(i, t) / D(t, t)));
                    if (D(i, t) != 0) {
                        swap_rows(i, t);
                        dirty = true;
                    }
                }
            }
            for (std::size_t j = t + 1; j < D.cols(); ++j) {
                while (D(t, j) != 0) {
                    add_col(j, t, -(D(t, j) / D(t, t)));
                    if (D(t, j) != 0) {
                        swap_cols(j, t);
                        dirty = true;
                    }
                }
            }
            if (dirty) continue;
            bool fixed = false;
            for (std::size_t i = t + 1; i < D.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < D.cols(); ++j) {
                    if (D(i, j) % D(t, t) != 0) {
                        add_row(t, i, 1);
                        fixed = true;
                        break;
                    }
                }
            if (!fixed) break;
        }
        if (D(t, t) < 0) negate_row(t);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SnfWorker w(m);
    std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < n; ++t) {
        if (!w.place_pivot(t)) break;
        w.reduce(t);
    }
    SmithForm out;
    out.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = w.D(i, i);
    out.U = std::move(w.U);
    out.V = std::move(w.V);
    out.U_inv = std::move(w.Ui);
    out.V_inv = std::move(w.Vi);
    return out;
}

bool CokernelElement::is_zero() const {
    return std::all_of(coordinates.begin(), coordinates.end(), [](const Integer& x) { return x == 0; });
}

std::string CokernelElement::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coordinates.size(); ++i) {
        if (i) os << ",";
        os << coordinates[i];
    }
    os << ")";
    return os.str();
}

CokernelElement cokernel_class(const SmithForm& snf, const IntVector& v) {
    if (v.size() != snf.U.cols()) throw std::invalid_argument("cokernel_class: length mismatch");
    IntVector uv = snf.U * v;
    CokernelElement e;
    for (std::size_t i = 0; i < uv.size(); ++i) {
        Integer d = i < snf.diagonal.size() ? snf.diagonal[i] : Integer(0);
        if (d == 1) continue;
        e.moduli.push_back(d);
        e.coordinates.push_back(d == 0 ? uv[i] : mod_floor(uv[i], d));
    }
    return e;
}

int signature(const RatMatrix& q) {
    if (!q.is_symmetric()) throw std::invalid_argument("signature: matrix not symmetric");
    RatMatrix a = q;
    const std::size_t n = a.rows();
    int sig = 0;
    auto swap_sym = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t j = k + 1;
            while (j < n && a(j, j).is_zero()) ++j;
            if (j < n) {
                swap_sym(k, j);
            } else {
                j = k + 1;
                while (j < n && a(k, j).is_zero()) ++j;
                if (j == n) continue;  // row k vanishes on the active block
                for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
                for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
            }
        }
        const ExtRational pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            ExtRational f = a(i, k) / pivot;
            for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
            for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
        }
        sig += pivot.sign();
    }
    return sig;
}

int signature(const IntMatrix& q) { return signature(to_rational(q)); }

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < col_limit && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
        ExtRational inv = ExtRational(1) / a(row, col);
        for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            ExtRational f = a(r, col);
            for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_rational: length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug, a.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
        if (!aug(r, a.cols()).is_zero()) return std::nullopt;
    RatVector y(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = aug(r, a.cols());
    return y;
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix& m) {
    RatMatrix a = to_rational(m);
    auto pivots = rref(a, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector x(a.cols());
        x[f] = ExtRational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a(r, f);
        Integer l = 1;
        for (const auto& e : x) l = boost::multiprecision::lcm(l, e.den());
        IntVector v(x.size());
        Integer g = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            v[i] = x[i].num() * (l / x[i].den());
            g = boost::multiprecision::gcd(g, v[i]);
        }
        if (g > 1)
            for (auto& e : v) e /= g;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rational_rank(const RatMatrix& m) {
    RatMatrix a = m;
    return rref(a, a.cols()).size();
}

}  // namespace stein
