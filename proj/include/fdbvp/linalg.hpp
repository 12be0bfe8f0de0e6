#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fdbvp::linalg {

using Vector = std::vector<double>;

/// Elimination met a pivot below the relative breakdown threshold
/// (1e-14 times the largest absolute entry of the input matrix).
class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Row-major dense matrix.
class DenseMatrix {
public:
    DenseMatrix(std::size_t n_rows, std::size_t n_cols, double fill = 0.0)
        : n_rows_(n_rows), n_cols_(n_cols), entries_(n_rows * n_cols, fill) {
        if (n_rows == 0 || n_cols == 0)
            throw std::invalid_argument("DenseMatrix: dimensions must be positive");
    }

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return n_rows_; }
    std::size_t cols() const { return n_cols_; }

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * n_cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_cols_ + j]; }

private:
    std::size_t n_rows_;
    std::size_t n_cols_;
    std::vector<double> entries_;
};

/// Tridiagonal matrix of order n stored as three bands:
/// sub (n-1), diag (n), super (n-1).
class Tridiagonal {
public:
    Tridiagonal(Vector sub, Vector diag, Vector super);

    std::size_t order() const { return diag_.size(); }
    const Vector& sub() const { return sub_; }
    const Vector& diag() const { return diag_; }
    const Vector& super() const { return super_; }

private:
    Vector sub_;
    Vector diag_;
    Vector super_;
};

double infinity_norm(const Vector& v);

Vector multiply(const DenseMatrix& a, const Vector& x);
Vector multiply(const Tridiagonal& t, const Vector& x);
DenseMatrix to_dense(const Tridiagonal& t);

/// Solve A x = b by Gaussian elimination with partial pivoting.
Vector dense_solve(DenseMatrix a, Vector b);

/// Solve T x = b with the Thomas algorithm in O(n). No pivoting: a vanishing
/// running pivot raises SingularMatrixError even for systems the pivoted
/// dense path can handle; callers may retry via dense_solve(to_dense(t), b).
Vector thomas_solve(const Tridiagonal& t, const Vector& b);

}  // namespace fdbvp::linalg
