#pragma once

#include "stein/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace stein {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix p(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k) == T(0)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += x(i, k) * y(k, j);
            }
        return p;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<ExtRational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<ExtRational>;

RatMatrix to_rational(const IntMatrix& m);

// U * M * V = D with D diagonal (d1 | d2 | ..., nonnegative), U and V unimodular.
// U_inv and V_inv are the exact inverses, so M = U_inv * D * V_inv.
struct SmithForm {
    std::vector<Integer> diagonal;  // length min(rows, cols)
    IntMatrix U, V, U_inv, V_inv;

    IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
    std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Canonical coordinates of v in coker(M) = Z^rows / im(M): (U v)_i reduced
// mod d_i for d_i > 1, kept as an integer where d_i = 0 or i >= min(rows,cols);
// coordinates with d_i = 1 are dropped.
struct CokernelElement {
    std::vector<Integer> moduli;       // 0 marks a free coordinate
    std::vector<Integer> coordinates;  // same length as moduli

    bool is_zero() const;
    std::string str() const;
    friend bool operator==(const CokernelElement&, const CokernelElement&) = default;
};

CokernelElement cokernel_class(const SmithForm& snf, const IntVector& v);

int signature(const RatMatrix& q);
int signature(const IntMatrix& q);

// Some rational solution of A y = b, or nullopt when b is outside the column space.
std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);

// Basis of the rational null space {x : A x = 0}, scaled to primitive integer vectors.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& a);

// Rank of the rational row space.
std::size_t rational_rank(const RatMatrix& a);

}  // namespace stein
