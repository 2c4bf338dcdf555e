#include "aqg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aqg {

QMat QMat::conj_transpose() const {
    QMat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
    return out;
}

QMat operator*(const QMat& a, const QMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMat: shape mismatch in product");
    QMat out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Qc& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

QMat operator-(const QMat& a, const QMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("QMat: shape mismatch in difference");
    QMat out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
    return out;
}

std::vector<Qc> QMat::apply(const std::vector<Qc>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("QMat: vector size mismatch");
    std::vector<Qc> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * x[j];
    return out;
}

bool QMat::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

double QMat::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v.to_cx()));
    return m;
}

namespace {

// Row-echelon elimination; returns pivot columns. Mutates m (and rhs if given).
std::vector<std::size_t> eliminate(QMat& m, std::vector<Qc>* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
            if (rhs) std::swap((*rhs)[p], (*rhs)[row]);
        }
        Qc inv = Qc(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        if (rhs) (*rhs)[row] *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Qc f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
            if (rhs) (*rhs)[i] -= f * (*rhs)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(QMat m) {
    return eliminate(m, nullptr).size();
}

std::optional<std::vector<Qc>> solve(QMat a, std::vector<Qc> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
    auto pivots = eliminate(a, &b);
    // Inconsistent iff a zero row meets a nonzero rhs entry.
    for (std::size_t i = pivots.size(); i < a.rows(); ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Qc> x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
    return x;
}

std::vector<Qc> least_squares(const QMat& a, const std::vector<Qc>& b) {
    QMat at = a.conj_transpose();
    QMat ata = at * a;
    std::vector<Qc> atb = at.apply(b);
    auto x = solve(std::move(ata), std::move(atb));
    if (!x) throw std::runtime_error("least_squares: normal equations singular");
    return *x;
}

std::optional<QMat> inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    std::size_t n = m.rows();
    QMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Qc(1);
    }
    auto pivots = eliminate(aug, nullptr);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    QMat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

std::vector<std::vector<Qc>> nullspace(QMat m) {
    std::size_t n = m.cols();
    auto pivots = eliminate(m, nullptr);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Qc>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Qc> v(n);
        v[free] = Qc(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool hermitian_positive_definite(const QMat& g) {
    if (g.rows() != g.cols()) return false;
    std::size_t n = g.rows();
    QMat m = g;
    for (std::size_t k = 0; k < n; ++k) {
        Qc pivot = m(k, k);
        if (!pivot.is_real() || pivot.re.sign() <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            Qc f = m(i, k) / pivot;
            if (f.is_zero()) continue;
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
        // Keep the trailing block Hermitian explicitly.
        for (std::size_t j = k + 1; j < n; ++j) m(k, j) = Qc(0);
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < i; ++j) m(j, i) = m(i, j).conj();
    }
    return true;
}

EigenResult hermitian_eigen(std::vector<std::vector<Cx>> m) {
    std::size_t n = m.size();
    std::vector<std::vector<Cx>> v(n, std::vector<Cx>(n, Cx(0, 0)));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = Cx(1, 0);

    auto off = [&]() {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += std::norm(m[i][j]);
        return s;
    };

    for (int sweep = 0; sweep < 100 && off() > 1e-30; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                Cx apq = m[p][q];
                if (std::abs(apq) < 1e-300) continue;
                // Unitary 2x2 rotation annihilating m[p][q]: first strip the
                // phase of a_pq, then a real Jacobi rotation.
                double app = m[p][p].real(), aqq = m[q][q].real();
                Cx phase = apq / std::abs(apq);
                double g = std::abs(apq);
                double theta = (aqq - app) / (2 * g);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                Cx sp = s * phase;  // complex sine carrying the phase
                for (std::size_t k = 0; k < n; ++k) {
                    Cx mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - std::conj(sp) * mkq;
                    m[k][q] = sp * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Cx mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - sp * mqk;
                    m[q][k] = std::conj(sp) * mpk + c * mqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Cx vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - std::conj(sp) * vkq;
                    v[k][q] = sp * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return m[a][a].real() < m[b][b].real(); });

    EigenResult out;
    out.eigenvalues.resize(n);
    out.eigenvectors.assign(n, std::vector<Cx>(n));
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = m[order[k]][order[k]].real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors[k][i] = v[i][order[k]];
    }
    return out;
}

}  // namespace aqg
