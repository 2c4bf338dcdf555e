#pragma once

#include <optional>
#include <vector>

#include "aqg/scalars.hpp"

namespace aqg {

// Dense matrix over the exact complex-rational field.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMat identity(std::size_t n) {
        QMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Qc(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Qc& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Qc& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QMat conj_transpose() const;
    friend QMat operator*(const QMat& a, const QMat& b);
    friend QMat operator-(const QMat& a, const QMat& b);
    friend bool operator==(const QMat& a, const QMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::vector<Qc> apply(const std::vector<Qc>& x) const;
    bool is_zero() const;
    double max_abs() const;  // max |entry| as double, for residual reporting

private:
    std::size_t rows_, cols_;
    std::vector<Qc> a_;
};

std::size_t rank(QMat m);

// Solves A x = b exactly. Returns nothing if the system is inconsistent.
std::optional<std::vector<Qc>> solve(QMat a, std::vector<Qc> b);

// Minimizer of |A x - b| via the exact normal equations A* A x = A* b.
// Always succeeds when A has full column rank; the caller inspects the
// residual to detect inconsistent input.
std::vector<Qc> least_squares(const QMat& a, const std::vector<Qc>& b);

std::optional<QMat> inverse(const QMat& m);

// Basis of the right nullspace, deterministic (free columns in index order,
// pivot normalized to 1).
std::vector<std::vector<Qc>> nullspace(QMat m);

// Exact positive-definiteness of a Hermitian matrix via the LDL* pivots.
// Returns false as soon as a pivot fails to be real and strictly positive.
bool hermitian_positive_definite(const QMat& g);

// Cyclic Jacobi eigensolver for Hermitian complex matrices. Returns
// eigenvalues ascending; eigenvectors[k] is the (unit) eigenvector for
// eigenvalues[k].
struct EigenResult {
    std::vector<double> eigenvalues;
    std::vector<std::vector<Cx>> eigenvectors;
};
EigenResult hermitian_eigen(std::vector<std::vector<Cx>> m);

}  // namespace aqg
