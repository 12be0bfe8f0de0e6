#include "fdbvp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace fdbvp::linalg {

namespace {

constexpr double kPivotRelThreshold = 1e-14;

bool all_finite(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](double e) { return std::isfinite(e); });
}

double max_abs(const Vector& v) {
    double m = 0.0;
    for (double e : v) m = std::max(m, std::abs(e));
    return m;
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Tridiagonal::Tridiagonal(Vector sub, Vector diag, Vector super)
    : sub_(std::move(sub)), diag_(std::move(diag)), super_(std::move(super)) {
    if (diag_.empty())
        throw std::invalid_argument("Tridiagonal: order must be at least 1");
    if (sub_.size() + 1 != diag_.size() || super_.size() + 1 != diag_.size())
        throw std::invalid_argument("Tridiagonal: band lengths inconsistent with order");
    if (!all_finite(sub_) || !all_finite(diag_) || !all_finite(super_))
        throw std::invalid_argument("Tridiagonal: non-finite entry");
}

double infinity_norm(const Vector& v) {
    return max_abs(v);
}

Vector multiply(const DenseMatrix& a, const Vector& x) {
    if (a.cols() != x.size())
        throw std::invalid_argument("multiply: dimension mismatch");
    Vector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Vector multiply(const Tridiagonal& t, const Vector& x) {
    const std::size_t n = t.order();
    if (x.size() != n)
        throw std::invalid_argument("multiply: dimension mismatch");
    Vector y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = t.diag()[i] * x[i];
        if (i > 0) s += t.sub()[i - 1] * x[i - 1];
        if (i + 1 < n) s += t.super()[i] * x[i + 1];
        y[i] = s;
    }
    return y;
}

DenseMatrix to_dense(const Tridiagonal& t) {
    const std::size_t n = t.order();
    DenseMatrix a(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = t.diag()[i];
        if (i > 0) a(i, i - 1) = t.sub()[i - 1];
        if (i + 1 < n) a(i, i + 1) = t.super()[i];
    }
    return a;
}

Vector dense_solve(DenseMatrix a, Vector b) {
    const std::size_t n = a.rows();
    if (a.cols() != n)
        throw std::invalid_argument("dense_solve: matrix must be square");
    if (b.size() != n)
        throw std::invalid_argument("dense_solve: right-hand side length mismatch");

    double amax = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) amax = std::max(amax, std::abs(a(i, j)));
    const double breakdown = kPivotRelThreshold * amax;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a(r, k)) > std::abs(a(p, k))) p = r;
        if (std::abs(a(p, k)) <= breakdown)
            throw SingularMatrixError("dense_solve: pivot below breakdown threshold in column " +
                                      std::to_string(k));
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            std::swap(b[k], b[p]);
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const double factor = a(r, k) / a(k, k);
            if (factor == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) a(r, j) -= factor * a(k, j);
            b[r] -= factor * b[k];
        }
    }

    Vector x(n, 0.0);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * x[j];
        x[ii] = s / a(ii, ii);
    }
    return x;
}

Vector thomas_solve(const Tridiagonal& t, const Vector& b) {
    const std::size_t n = t.order();
    if (b.size() != n)
        throw std::invalid_argument("thomas_solve: right-hand side length mismatch");

    const double amax = std::max({max_abs(t.sub()), max_abs(t.diag()), max_abs(t.super())});
    const double breakdown = kPivotRelThreshold * amax;

    Vector c(n > 1 ? n - 1 : 0, 0.0);  // eliminated superdiagonal
    Vector d(n, 0.0);                  // transformed right-hand side

    double pivot = t.diag()[0];
    if (std::abs(pivot) <= breakdown)
        throw SingularMatrixError("thomas_solve: pivot below breakdown threshold at row 0");
    if (n > 1) c[0] = t.super()[0] / pivot;
    d[0] = b[0] / pivot;

    for (std::size_t i = 1; i < n; ++i) {
        pivot = t.diag()[i] - t.sub()[i - 1] * c[i - 1];
        if (std::abs(pivot) <= breakdown)
            throw SingularMatrixError("thomas_solve: pivot below breakdown threshold at row " +
                                      std::to_string(i));
        if (i + 1 < n) c[i] = t.super()[i] / pivot;
        d[i] = (b[i] - t.sub()[i - 1] * d[i - 1]) / pivot;
    }

    Vector x(n, 0.0);
    x[n - 1] = d[n - 1];
    for (std::size_t ii = n - 1; ii-- > 0;) x[ii] = d[ii] - c[ii] * x[ii + 1];
    return x;
}

}  // namespace fdbvp::linalg
