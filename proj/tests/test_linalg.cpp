#include <doctest.h>

#include <cmath>

#include "aqg/linalg.hpp"

using namespace aqg;

namespace {

QMat from_rows(std::vector<std::vector<long>> rows) {
    QMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Qc(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rank, solve, nullspace over exact complex rationals") {
    QMat a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(a) == 2);

    auto x = solve(from_rows({{2, 0}, {0, 4}}), {Qc(6), Qc(8)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Qc(3));
    CHECK((*x)[1] == Qc(2));

    // inconsistent overdetermined system
    CHECK_FALSE(solve(from_rows({{1, 0}, {1, 0}}), {Qc(1), Qc(2)}).has_value());

    auto ns = nullspace(from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}));
    REQUIRE(ns.size() == 1);
    // verify A v = 0 exactly
    auto v = ns[0];
    auto img = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}).apply(v);
    for (const auto& c : img) CHECK(c.is_zero());

    auto inv = inverse(from_rows({{1, 1}, {0, 1}}));
    REQUIRE(inv.has_value());
    CHECK((*inv) * from_rows({{1, 1}, {0, 1}}) == QMat::identity(2));
    CHECK_FALSE(inverse(from_rows({{1, 1}, {2, 2}})).has_value());

    auto ls = least_squares(from_rows({{1}, {1}}), {Qc(1), Qc(3)});
    CHECK(ls[0] == Qc(2));
}

TEST_CASE("exact positive definiteness certificates") {
    CHECK(hermitian_positive_definite(from_rows({{2, 1}, {1, 2}})));
    CHECK_FALSE(hermitian_positive_definite(from_rows({{1, 2}, {2, 1}})));
    CHECK_FALSE(hermitian_positive_definite(from_rows({{0, 0}, {0, 1}})));
    // complex Hermitian: [[2, i],[-i, 2]] is positive definite
    QMat h(2, 2);
    h(0, 0) = Qc(2);
    h(1, 1) = Qc(2);
    h(0, 1) = Qc(Rational(0), Rational(1));
    h(1, 0) = Qc(Rational(0), Rational(-1));
    CHECK(hermitian_positive_definite(h));
}

TEST_CASE("Jacobi Hermitian eigensolver") {
    // eigenvalues of [[2, i],[-i, 2]] are 1 and 3
    std::vector<std::vector<Cx>> m = {{Cx(2, 0), Cx(0, 1)}, {Cx(0, -1), Cx(2, 0)}};
    auto e = hermitian_eigen(m);
    CHECK(std::abs(e.eigenvalues[0] - 1.0) < 1e-12);
    CHECK(std::abs(e.eigenvalues[1] - 3.0) < 1e-12);
    // residual ||A v - lambda v||
    for (int k = 0; k < 2; ++k) {
        for (int i = 0; i < 2; ++i) {
            Cx av(0, 0);
            for (int j = 0; j < 2; ++j) av += m[i][j] * e.eigenvectors[k][j];
            CHECK(std::abs(av - e.eigenvalues[k] * e.eigenvectors[k][i]) < 1e-12);
        }
    }

    // a 4x4 Hermitian built from a fixed seedless pattern
    std::vector<std::vector<Cx>> b(4, std::vector<Cx>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b[i][j] = Cx(0.3 * (i + 1) * (j + 1), 0.7 * (i - j));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Cx sym = 0.5 * (b[i][j] + std::conj(b[j][i]));
            b[i][j] = sym;
            b[j][i] = std::conj(sym);
        }
    auto e4 = hermitian_eigen(b);
    double trace = 0;
    for (int i = 0; i < 4; ++i) trace += b[i][i].real();
    double sum = 0;
    for (double ev : e4.eigenvalues) sum += ev;
    CHECK(std::abs(sum - trace) < 1e-10);
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i) {
            Cx av(0, 0);
            for (int j = 0; j < 4; ++j) av += b[i][j] * e4.eigenvectors[k][j];
            CHECK(std::abs(av - e4.eigenvalues[k] * e4.eigenvectors[k][i]) < 1e-9);
        }
}
