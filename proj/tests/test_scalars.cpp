#include <doctest.h>

#include <cmath>
#include <random>

#include "aqg/oneparam.hpp"
#include "aqg/qexp.hpp"
#include "aqg/scalars.hpp"

using namespace aqg;

TEST_CASE("rational arithmetic is exact") {
    Rational a = Rational::parse("3/7");
    Rational b = Rational::parse("7/3");
    CHECK(a * b == Rational(1));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 5).pow(-2) == Rational(25, 4));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("q_power on the examples") {
    Rational half(1, 2);
    CHECK(q_power(half, Cx(0, 0)) == Cx(1, 0));
    CHECK(q_power(half, Cx(2, 0)).real() == doctest::Approx(0.25).epsilon(1e-15));

    // Independent oracle: exp(i ln(1/2)) = cos(ln 2) - i sin(ln 2)
    double l2 = std::log(2.0);
    Cx oracle(std::cos(l2), -std::sin(l2));
    CHECK(std::abs(oracle.real() - 0.7692389013639721) < 1e-15);
    CHECK(std::abs(oracle.imag() + 0.6389612763136348) < 1e-15);
    CHECK(approx_eq(q_power(half, Cx(0, 1)), oracle));
    CHECK(approx_eq(Cx(0.769239, -0.638961), q_power(half, Cx(0, 1)),
                    ToleranceCfg{1e-5, -1e-10}));

    CHECK_THROWS(q_power(Rational(0), Cx(1, 0)));
    CHECK_THROWS(q_power(Rational(3, 2), Cx(1, 0)));
}

TEST_CASE("approx_eq thresholds") {
    ToleranceCfg cfg;
    CHECK(approx_eq(Cx(1, 0), Cx(1, 0), cfg));
    CHECK_FALSE(approx_eq(Cx(1, 0), Cx(1, 2e-9), cfg));
}

TEST_CASE("q_power group and conjugation laws on the grid") {
    for (const Rational& q : {Rational(1, 2), Rational(1, 3), Rational(9, 10)}) {
        auto grid = default_z_grid();
        for (const Qc& y : grid)
            for (const Qc& z : grid) {
                Cx lhs = q_power(q, y + z);
                Cx rhs = q_power(q, y) * q_power(q, z);
                CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(lhs)));
            }
        for (const Qc& z : grid) {
            Cx lhs = q_power(q, z.conj());
            Cx rhs = std::conj(q_power(q, z));
            CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
        }
    }
}

TEST_CASE("QExp canonical form folds integer powers") {
    Rational half(1, 2);
    // q^2 as a symbolic power equals the plain rational 1/4
    CHECK(QExp::power(half, Qc(2)) == QExp(Rational(1, 4)));
    CHECK(QExp::power(half, Qc(-3)) == QExp(Rational(8)));
    // q^{iz} q^{-iz} = 1
    Qc e(Rational(0), Rational(5, 7));
    CHECK(QExp::power(half, e) * QExp::power(half, Qc(Rational(0), Rational(-5, 7))) ==
          QExp(1));
    // mixed real parts: q^{1 + iw} = (1/2) q^{iw}
    QExp a = QExp::power(half, Qc(Rational(1), Rational(2)));
    QExp b = QExp::term(half, Rational(1, 2), Qc(Rational(0), Rational(2)));
    CHECK(a == b);
    // numeric evaluation agrees with q_power
    Qc z(Rational(1, 2), Rational(1, 3));
    CHECK(std::abs(QExp::power(half, z).eval() - q_power(half, z)) < 1e-15);
    // conjugation
    CHECK(QExp::power(half, z).conj() == QExp::power(half, z.conj()));
    // exact zero detection
    CHECK((QExp::power(half, z) - QExp::power(half, z)).is_zero());
}

TEST_CASE("spectral group exact laws") {
    SpectralGroup g;
    g.q = Rational(1, 2);
    g.w = {Rational(0), Rational(2), Rational(-4)};
    auto grid = default_z_grid();
    CHECK(group_law_residual(g, grid) == 0.0);
    CHECK(inverse_law_residual(g, grid) == 0.0);
    CHECK(p_operator_residual(g, grid) == 0.0);

    // alpha_{-i} on the eigenvalue-4 line scales by 4 (w = -2 at q = 1/2)
    SpectralGroup s;
    s.q = Rational(1, 2);
    s.w = {Rational(-2)};
    CHECK(s.line_at_minus_i(0) == Rational(4));
    CHECK(std::abs(s.line_scale(0, Qc(Rational(0), Rational(-1))).eval() - Cx(4, 0)) == 0.0);
    // z = 0 is the identity
    CHECK(s.line_scale(0, Qc(0)) == QExp(1));

    // rebuild from the exact values at i: alpha_i acts by q^{-w} = 4, 1/16
    std::vector<Rational> at_i = {Rational(1), Rational(4), Rational(1, 16)};
    auto rebuilt = rebuild_from_value_at_i(Rational(1, 2), at_i, 64);
    REQUIRE(rebuilt.has_value());
    CHECK(group_agreement_residual(g, *rebuilt, grid) == 0.0);
    CHECK_FALSE(first_difference_at_i(g, *rebuilt).has_value());

    // a value that is not an integer power of q is rejected
    CHECK_FALSE(rebuild_from_value_at_i(Rational(1, 2), {Rational(3)}, 64).has_value());
}

TEST_CASE("QExp ring laws on generated scalars") {
    Rational q(1, 3);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    auto rand_qexp = [&]() {
        QExp x;
        for (int t = 0; t < 3; ++t) {
            Rational r(num(rng), 2);
            Qc e(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
            x += QExp::term(q, r, e);
        }
        return x;
    };
    for (int trial = 0; trial < 200; ++trial) {
        QExp a = rand_qexp(), b = rand_qexp(), c = rand_qexp();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
        CHECK((a * b).conj() == a.conj() * b.conj());
        // numeric evaluation is a ring homomorphism up to rounding
        Cx lhs = (a * b).eval();
        Cx rhs = a.eval() * b.eval();
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("compute_lambda accepts invariant functionals only") {
    SpectralGroup g;
    g.q = Rational(1, 2);
    g.w = {Rational(0), Rational(2)};
    // phi supported on the trivial line: lambda = 1
    auto r = compute_lambda(g, {Rational(1), Rational(0)});
    CHECK(r.lambda == Rational(1));
    CHECK(r.ratio_deviation == 0.0);
    // phi touching the nontrivial line is not relatively invariant
    CHECK_THROWS(compute_lambda(g, {Rational(0), Rational(1)}));
    CHECK_THROWS(compute_lambda(g, {Rational(0), Rational(0)}));
}
