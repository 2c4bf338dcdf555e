#include <doctest.h>

#include <random>

#include "aqg/linalg.hpp"
#include "aqg/suq2.hpp"

using namespace aqg;
using namespace aqg::suq2;

namespace {

NcPoly<Rational> mono(int k, int l, int m) {
    return NcPoly<Rational>::monomial(PbwTerm{k, l, m});
}

Rational coeff_of(const NcPoly<Rational>& p, int k, int l, int m) {
    auto it = p.terms().find(PbwTerm{k, l, m});
    return it == p.terms().end() ? Rational(0) : it->second;
}

// Independent Haar oracle: solve the left-invariance system
// (id ⊗ h)Delta(x) = h(x) 1 restricted to monomials of degree <= 2, with
// h(1) = 1, and read off the unknown h-values. Never consults the closed
// formula.
std::vector<Qc> haar_by_invariance(const Engine& eng) {
    auto mons = Engine::monomials_up_to(2);
    std::size_t n = mons.size();
    auto index_of = [&](const PbwTerm& t) {
        for (std::size_t i = 0; i < n; ++i)
            if (mons[i] == t) return i;
        throw std::logic_error("oracle: leg outside the degree-2 span");
    };
    std::vector<std::vector<Qc>> rows;
    std::vector<Qc> rhs;
    for (const auto& x : mons) {
        // coefficient of each left-leg monomial u: sum_v c_{uv} h(v) - [u == 1] h(x) = 0
        std::map<PbwTerm, std::vector<Qc>> per_left;
        for (const auto& [key, c] : eng.comult_mono(x)) {
            auto& row = per_left[key.first];
            row.resize(n);
            row[index_of(key.second)] += Qc(c);
        }
        for (auto& [u, row] : per_left) {
            row.resize(n);
            if (u == PbwTerm{}) row[index_of(x)] -= Qc(1);
            rows.push_back(row);
            rhs.push_back(Qc(0));
        }
        // left legs that never appear still force h(x) * 0 = 0; nothing to add
    }
    // normalization h(1) = 1
    std::vector<Qc> norm(n);
    norm[index_of(PbwTerm{})] = Qc(1);
    rows.push_back(norm);
    rhs.push_back(Qc(1));

    QMat m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    auto sol = solve(std::move(m), std::move(rhs));
    REQUIRE(sol.has_value());
    return *sol;
}

}  // namespace

TEST_CASE("normal form on the defining relations") {
    Engine eng(Rational(1, 2));
    // word (c, a) -> q^{-1} a c = 2 a c
    NcPoly<Rational> p = eng.normal_form({Gen::C, Gen::A});
    CHECK(p.terms().size() == 1);
    CHECK(coeff_of(p, 1, 1, 0) == Rational(2));
    // word (a, a*) -> 1 - q^2 c c* = 1 - (1/4) c c*
    NcPoly<Rational> r = eng.normal_form({Gen::A, Gen::As});
    CHECK(coeff_of(r, 0, 0, 0) == Rational(1));
    CHECK(coeff_of(r, 0, 1, 1) == Rational(-1, 4));
    // associativity witness: (a a*)(a a*) vs a ((a* a) a*)
    NcPoly<Rational> lhs = eng.multiply(eng.normal_form({Gen::A, Gen::As}),
                                        eng.normal_form({Gen::A, Gen::As}));
    NcPoly<Rational> rhs = eng.multiply(
        mono(1, 0, 0),
        eng.multiply(eng.normal_form({Gen::As, Gen::A}), mono(-1, 0, 0)));
    CHECK(lhs == rhs);
}

TEST_CASE("star is an involution and matches the relations") {
    Engine eng(Rational(1, 2));
    // star(c a) = a* c*
    NcPoly<Rational> ca = eng.normal_form({Gen::C, Gen::A});
    NcPoly<Rational> s = eng.star(ca);
    CHECK(s.terms().size() == 1);
    CHECK(coeff_of(s, -1, 0, 1) == Rational(1));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        NcPoly<Rational> x;
        for (int t = 0; t < 3; ++t) {
            std::vector<Gen> word;
            int L = len(rng);
            for (int i = 0; i < L; ++i) word.push_back(static_cast<Gen>(pick(rng)));
            int c = num(rng);
            if (c == 0) c = 1;
            x += eng.normal_form(word).scaled(Rational(c, 2));
        }
        CHECK(eng.star(eng.star(x)) == x);
    }
}

TEST_CASE("rewriting confluence surrogate: all bracketings agree") {
    Engine eng(Rational(1, 3));
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> len(1, 8);

    // normal form of a word by a random bracketing order
    std::function<NcPoly<Rational>(const std::vector<Gen>&, std::size_t, std::size_t)>
        bracket = [&](const std::vector<Gen>& w, std::size_t lo, std::size_t hi) {
            if (hi - lo == 1) return eng.normal_form({w[lo]});
            std::uniform_int_distribution<std::size_t> cut(lo + 1, hi - 1);
            std::size_t c = cut(rng);
            return eng.multiply(bracket(w, lo, c), bracket(w, c, hi));
        };

    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Gen> word;
        int L = len(rng);
        for (int i = 0; i < L; ++i) word.push_back(static_cast<Gen>(pick(rng)));
        NcPoly<Rational> reference = eng.normal_form(word);
        CHECK(bracket(word, 0, word.size()) == reference);
    }
}

TEST_CASE("comultiplication basics") {
    Engine eng(Rational(1, 2));
    // Delta(1) = 1 ⊗ 1
    auto d1 = eng.comult_mono(PbwTerm{});
    CHECK(d1.terms().size() == 1);
    // (eps ⊗ id)Delta(c) = c
    NcPoly<Rational> left;
    for (const auto& [key, c] : eng.comult_mono(PbwTerm{0, 1, 0}))
        if (key.first.l == 0 && key.first.m == 0) left.add(key.second, c);
    CHECK(left == mono(0, 1, 0));
    // coassociativity on a few monomials, exact
    for (const auto& x : Engine::monomials_up_to(3)) {
        std::map<std::tuple<PbwTerm, PbwTerm, PbwTerm>, Rational> lhs, rhs;
        for (const auto& [key, c] : eng.comult_mono(x)) {
            for (const auto& [k2, c2] : eng.comult_mono(key.first)) {
                auto& v = lhs[{k2.first, k2.second, key.second}];
                v += c * c2;
                if (v.is_zero()) lhs.erase({k2.first, k2.second, key.second});
            }
            for (const auto& [k2, c2] : eng.comult_mono(key.second)) {
                auto& v = rhs[{key.first, k2.first, k2.second}];
                v += c * c2;
                if (v.is_zero()) rhs.erase({key.first, k2.first, k2.second});
            }
        }
        CHECK(lhs == rhs);
    }
    // degree cap error
    Engine capped(Rational(1, 2), 2);
    CHECK_THROWS(capped.comult_mono(PbwTerm{3, 0, 0}));
}

TEST_CASE("counit and antipode on generators") {
    Engine eng(Rational(1, 2));
    CHECK(eng.counit(mono(3, 0, 0)) == Rational(1));
    CHECK(eng.counit(mono(-2, 0, 0)) == Rational(1));
    CHECK(eng.counit(mono(0, 1, 0)) == Rational(0));

    // S(c) = -q c; verify the defining equation m(S ⊗ id)(Delta(c)(1 ⊗ y)) = 0
    auto sc = eng.antipode_mono(PbwTerm{0, 1, 0});
    CHECK(sc.term == PbwTerm{0, 1, 0});
    CHECK(sc.factor == Rational(-1, 2));
    for (const PbwTerm& y : {PbwTerm{}, PbwTerm{1, 0, 0}, PbwTerm{0, 0, 1}}) {
        NcPoly<Rational> acc;
        for (const auto& [key, c] : eng.comult_mono(PbwTerm{0, 1, 0})) {
            auto su = eng.antipode_mono(key.first);
            acc += eng.multiply(NcPoly<Rational>::monomial(su.term),
                                eng.mono_mul(key.second, y))
                       .scaled(c * su.factor);
        }
        CHECK(acc.is_zero());
    }

    // S^2(c) = q^2 c and it matches tau_{-i}
    auto s2 = eng.s_squared_mono(PbwTerm{0, 1, 0});
    CHECK(s2.factor == Rational(1, 4));
    NcPoly<QExp> tau_c = eng.flow_apply(Engine::Flow::Tau, Qc(Rational(0), Rational(-1)),
                                        NcPoly<QExp>::monomial(PbwTerm{0, 1, 0}));
    NcPoly<QExp> expect = NcPoly<QExp>::monomial(PbwTerm{0, 1, 0}).scaled(QExp(Rational(1, 4)));
    CHECK(tau_c == expect);
}

TEST_CASE("Haar state: closed formula against the invariance-system oracle") {
    for (const Rational& q : {Rational(1, 2), Rational(1, 3), Rational(9, 10)}) {
        Engine eng(q);
        auto oracle = haar_by_invariance(eng);
        auto mons = Engine::monomials_up_to(2);
        for (std::size_t i = 0; i < mons.size(); ++i) {
            Qc expect = oracle[i];
            CHECK(expect == Qc(eng.haar_mono(mons[i])));
        }
    }
    Engine half(Rational(1, 2));
    CHECK(half.haar_mono(PbwTerm{}) == Rational(1));
    CHECK(half.haar_mono(PbwTerm{1, 0, 0}) == Rational(0));
    CHECK(half.haar_mono(PbwTerm{0, 1, 1}) == Rational(4, 5));
}

TEST_CASE("Haar invariance is exact up to degree 4") {
    Engine eng(Rational(1, 2));
    for (const auto& x : Engine::monomials_up_to(4)) {
        NcPoly<Rational> acc;
        for (const auto& [key, c] : eng.comult_mono(x)) {
            Rational hv = eng.haar_mono(key.second);
            if (!hv.is_zero()) acc.add(key.first, c * hv);
        }
        acc -= NcPoly<Rational>::one().scaled(eng.haar_mono(x));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("perturbed Haar breaks invariance by at least the perturbation") {
    Engine eng(Rational(1, 2), 4);
    eng.perturb_haar_cc(Rational(1, 1000));
    double worst = 0;
    for (const auto& x : Engine::monomials_up_to(2)) {
        NcPoly<Rational> acc;
        for (const auto& [key, c] : eng.comult_mono(x)) {
            Rational hv = eng.haar_mono(key.second);
            if (!hv.is_zero()) acc.add(key.first, c * hv);
        }
        acc -= NcPoly<Rational>::one().scaled(eng.haar_mono(x));
        worst = std::max(worst, acc.max_abs(eng.q()));
    }
    CHECK(worst >= 1e-3);
}

TEST_CASE("Gram of h is positive definite on the degree-4 subspace") {
    Engine eng(Rational(1, 2));
    auto g = eng.gram(4);
    std::size_t n = g.size();
    QMat form(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) form(j, i) = Qc(g[i][j]);
    CHECK(hermitian_positive_definite(form));
}

TEST_CASE("analytic maps on monomials") {
    Engine eng(Rational(1, 2));
    auto c = NcPoly<QExp>::monomial(PbwTerm{0, 1, 0});
    // zero parameter: identity
    CHECK(eng.flow_apply(Engine::Flow::Tau, Qc(0), c) == c);
    CHECK(eng.flow_apply(Engine::Flow::Sigma, Qc(0), c) == c);
    // f_0 = eps on the generators
    Character f0 = eng.f_character(Qc(0));
    CHECK(f0.value_on(PbwTerm{1, 0, 0}) == QExp(1));
    CHECK(f0.value_on(PbwTerm{0, 1, 0}).is_zero());
    // R(c) = -c independent of q, R^2 = id
    auto rc = eng.r_mono(PbwTerm{0, 1, 0});
    CHECK(rc.term == PbwTerm{0, 1, 0});
    CHECK(rc.factor == Rational(-1));
    for (const auto& x : Engine::monomials_up_to(3)) {
        auto r1 = eng.r_mono(x);
        auto r2 = eng.r_mono(r1.term);
        CHECK(r2.term == x);
        CHECK(r1.factor * r2.factor == Rational(1));
    }
    // convolution route is diagonal: sandwich(f_{iz}, f_{iz}, x) supported on x
    Qc z(Rational(1, 2), Rational(1, 3));
    Qc iz(-z.im, z.re);
    Character fiz = eng.f_character(iz);
    for (const auto& x : Engine::monomials_up_to(2)) {
        auto out = eng.sandwich(fiz, fiz, NcPoly<QExp>::monomial(x));
        for (const auto& [t, cc] : out.terms()) CHECK(t == x);
    }
}

TEST_CASE("flipped f sign violates the Woronowicz constraints") {
    Engine eng(Rational(1, 2), 4);
    eng.flip_f_sign();
    Character f1 = eng.f_character(Qc(1));
    // rho(a) = q^{-2} a from the KMS pairing; the flipped sandwich gives q^{+2} a
    auto out = eng.sandwich(f1, f1, NcPoly<QExp>::monomial(PbwTerm{1, 0, 0}));
    NcPoly<QExp> want =
        NcPoly<QExp>::monomial(PbwTerm{1, 0, 0}).scaled(QExp(Rational(1, 4).pow(-1)));
    CHECK_FALSE((out - want).is_zero());
    double resid = (out - want).max_abs(eng.q());
    CHECK(resid >= 1.5);  // |q^2 - q^{-2}| = 3.75 at q = 1/2
}
