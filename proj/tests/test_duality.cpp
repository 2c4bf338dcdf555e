#include <doctest.h>


#include <random>
#include "aqg/duality.hpp"
#include "aqg/instance.hpp"
#include "aqg/oneparam.hpp"
#include "aqg/suites.hpp"

using namespace aqg;
using suq2::Character;
using suq2::Engine;
using suq2::NcPoly;
using suq2::PbwTerm;
using suq2::ShiftedHaar;

namespace {

std::string inst_path(const std::string& name) {
    return std::string(AQG_INSTANCE_DIR) + "/" + name;
}

AlgebraSpec load_spec(const std::string& name) {
    Instance inst = load_instance(inst_path(name));
    REQUIRE(inst.kind == Instance::Kind::Finite);
    return *inst.finite;
}

NcPoly<QExp> mono_q(int k, int l, int m) {
    return NcPoly<QExp>::monomial(PbwTerm{k, l, m});
}

}  // namespace

TEST_CASE("dual of C[Z2]: brute-force convolution table") {
    FinitePipeline pipe(load_spec("c_z2.json"));
    const DualResult& d = pipe.dual();
    std::size_t n = 2;

    // brute force: (e_i phi ⊙ e_j phi)(Delta(e_m)) against the solved table
    const AlgebraSpec& a = pipe.spec();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                Qc brute;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        const Qc& c = a.comult[m][p * n + q];
                        if (!c.is_zero()) brute += c * d.pairing(p, i) * d.pairing(q, j);
                    }
                Qc via_table = dual_eval(d, d.dual.mult[i][j].dense(n),
                                         Element::basis(m).dense(n));
                CHECK(brute == via_table);
            }

    // psi^(g^) = eps(g) = 1
    CHECK(d.psi_hat.at(1) == Qc(1));

    // Plancherel for a = e + g: both sides equal 2
    Element ahat;
    ahat.add(0, Qc(1));
    ahat.add(1, Qc(1));
    const AlgebraSpec& ds = d.dual;
    Element prod = ds.mul(ds.star_of(ahat), ahat);
    CHECK(d.psi_hat(prod) == Qc(2));
    Element aa = pipe.spec().mul(pipe.spec().star_of(ahat), ahat);
    CHECK(pipe.haar().phi(aa) == Qc(2));

    // the dual is a valid spec isomorphic to F(Z2): commutative and
    // cocommutative with the right counit
    CHECK(validate_structure(d.dual).pass());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            CHECK((d.dual.mult[i][j] - d.dual.mult[j][i]).is_zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                CHECK(d.dual.comult[i][p * n + q] == d.dual.comult[i][q * n + p]);
}

TEST_CASE("dual of F(S3) carries the structure constants of C[S3]") {
    FinitePipeline pipe(load_spec("f_s3.json"));
    FinitePipeline group(load_spec("c_s3.json"));
    const DualResult& d = pipe.dual();
    std::size_t n = 6;
    // With phi(delta_s) = 1/6, the rescaled basis u_s = 6 e_s phi multiplies
    // exactly like the group algebra: u_s u_t = u_{st}.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element scaled = d.dual.mult[i][j].scaled(Qc(Rational(6)));
            Element expect = group.spec().mult[i][j];
            CHECK((scaled - expect).is_zero());
        }
}

TEST_CASE("bidual of C[Z2] and F(S3) is the canonical isomorphism") {
    for (const char* name : {"c_z2.json", "f_s3.json"}) {
        FinitePipeline pipe(load_spec(name));
        FinitePipeline dual_pipe(pipe.dual().dual);
        BidualOutcome out = bidual_check(pipe, dual_pipe);
        INFO(name, " witness: ", out.witness);
        CHECK(out.ok());
    }
}

TEST_CASE("fourier transform bookkeeping on C[S3]") {
    FinitePipeline pipe(load_spec("c_s3.json"));
    const DualResult& d = pipe.dual();
    // the pairing matrix is exactly the nonsingularity of the Fourier map
    CHECK(rank(d.pairing) == 6);
}

TEST_CASE("compact dual formulas agree both ways") {
    Engine eng(Rational(1, 2), 4);
    ShiftedHaar omega = ShiftedHaar::fourier(mono_q(0, 1, 0));

    // sigma^_i(omega)(c*) both sides
    Qc z(Rational(0), Rational(1));
    QExp lhs = sigma_hat_eval(eng, as_eval(eng, omega), z, mono_q(0, 0, 1));
    QExp rhs = omega.eval(eng, eng.flow_apply(Engine::Flow::Tau, z, mono_q(0, 0, 1)));
    CHECK(lhs == rhs);

    // omega_z lemma for omega = psi a at a single point
    ShiftedHaar psia = ShiftedHaar::psi_shift(mono_q(1, 0, 0));
    Qc w(Rational(1, 2), Rational(1, 3));
    for (const auto& x : Engine::monomials_up_to(3)) {
        QExp def = psia.eval(eng, eng.flow_apply(Engine::Flow::Tau, w,
                                                 NcPoly<QExp>::monomial(x)));
        ShiftedHaar closed = ShiftedHaar::psi_shift(
            eng.flow_apply(Engine::Flow::Tau, Qc(-w.re, -w.im), mono_q(1, 0, 0)));
        QExp via = closed.eval(eng, NcPoly<QExp>::monomial(x));
        CHECK(def == via);
    }

    // S^2^(omega) = omega S^2
    for (const auto& x : Engine::monomials_up_to(3)) {
        QExp a = dual_antipode_eval(
            eng,
            [&](const NcPoly<QExp>& v) { return dual_antipode_eval(eng, as_eval(eng, omega), v); },
            NcPoly<QExp>::monomial(x));
        QExp b = omega.eval(eng, eng.s_squared(NcPoly<QExp>::monomial(x)));
        CHECK(a == b);
    }
}

TEST_CASE("delta_hat characters and the f-link") {
    Engine eng(Rational(1, 2), 4);

    // z = 0 gives eps
    Character u0 = eng.delta_hat_character(Qc(0));
    CHECK(u0.value_on(PbwTerm{1, 0, 0}) == QExp(1));
    CHECK(u0.value_on(PbwTerm{0, 1, 0}).is_zero());

    // z = i evaluates on a to rho's eigenvalue q^{-2}
    Character ui = eng.delta_hat_character(Qc(Rational(0), Rational(1)));
    CHECK(ui.value_on(PbwTerm{1, 0, 0}) == QExp(Rational(4)));  // (1/2)^{-2}

    // delta^^z = f_{-2z} at z = 1 on the generator a: both equal q^2
    Character dz = eng.delta_hat_character(Qc(Rational(0), Rational(-1)));  // delta^^1
    Character f2 = eng.f_character(Qc(Rational(-2)));
    CHECK(dz.value_on(PbwTerm{1, 0, 0}) == f2.value_on(PbwTerm{1, 0, 0}));
    CHECK(dz.value_on(PbwTerm{1, 0, 0}) == QExp(Rational(1, 4)));

    // sandwich at z = -i/2: the middle leg equals S^2
    Qc zh(Rational(0), Rational(-1, 2));
    Character l = eng.delta_hat_character(Qc(-zh.re, -zh.im));
    Character r = eng.delta_hat_character(zh);
    for (const auto& x : Engine::monomials_up_to(3)) {
        NcPoly<QExp> lhs = eng.sandwich(l, r, NcPoly<QExp>::monomial(x));
        auto s2 = eng.s_squared_mono(x);
        NcPoly<QExp> rhs = NcPoly<QExp>::monomial(s2.term).scaled(QExp(s2.factor));
        CHECK(lhs == rhs);
    }

    // sandwich at z = 0 is the identity map
    Character e0 = eng.delta_hat_character(Qc(0));
    for (const auto& x : Engine::monomials_up_to(2)) {
        NcPoly<QExp> lhs = eng.sandwich(e0, e0, NcPoly<QExp>::monomial(x));
        CHECK(lhs == NcPoly<QExp>::monomial(x));
    }
}

TEST_CASE("Plancherel holds for random elements of Kac-Paljutkin") {
    FinitePipeline pipe(load_spec("kac_paljutkin.json"));
    const DualResult& d = pipe.dual();
    const AlgebraSpec& a = pipe.spec();
    const AlgebraSpec& ds = d.dual;
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        Element x;
        for (std::size_t i = 0; i < 8; ++i)
            x.add(i, Qc(Rational(num(rng), 2), Rational(num(rng), 3)));
        // psi^(x^* x^) = phi(x* x), with fourier the identity on coordinates
        Element prod_dual = ds.mul(ds.star_of(x), x);
        Qc lhs = d.psi_hat(prod_dual);
        Qc rhs = pipe.haar().phi(a.mul(a.star_of(x), x));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("compact dual Haar evaluation forms") {
    Engine eng(Rational(1, 2), 4);
    // psi^(a h) = eps(a): the a-power part survives, c-parts die
    ShiftedHaar ahat = ShiftedHaar::fourier(mono_q(2, 0, 0) + mono_q(0, 1, 0));
    CHECK(psi_hat_compact(eng, ahat) == QExp(1));
    ShiftedHaar psia = ShiftedHaar::psi_shift(mono_q(-1, 0, 0));
    CHECK(phi_hat_compact(eng, psia) == QExp(1));
    // mismatched representations are rejected
    CHECK_THROWS_AS(psi_hat_compact(eng, psia), std::domain_error);
    CHECK_THROWS_AS(phi_hat_compact(eng, ahat), std::domain_error);
}

TEST_CASE("broken tables surface through every suite") {
    Instance inst = load_instance(inst_path("faults/nonassociative.json"));
    SuiteConfig cfg;
    Report rep = run_suite(inst, "duality", cfg);
    CHECK_FALSE(rep.pass());
    bool saw_assoc = false;
    for (const auto& e : rep.entries)
        if (e.id == "structure.associativity" && !e.pass) saw_assoc = true;
    CHECK(saw_assoc);
}

TEST_CASE("phi_hat evaluation and the exploratory Gram report") {
    FinitePipeline pipe(load_spec("c_z2.json"));
    const DualResult& d = pipe.dual();
    // phi^(psi a) = eps(a): for a = e_i the functional psi a has computable
    // coordinates; the defining property round-trips through the solver.
    for (std::size_t i = 0; i < 2; ++i) {
        std::vector<Qc> values(2);
        for (std::size_t m = 0; m < 2; ++m) values[m] = d.psi_shift(m, i);
        std::vector<Qc> coords = d.pairing_inv.apply(values);
        Qc got = phi_hat_eval(d, pipe.counit(), coords);
        CHECK(got == pipe.counit().at(i));
    }
    FinitePipeline dual_pipe(d.dual);
    auto ph = [&](const std::vector<Qc>& coords) {
        return phi_hat_eval(d, pipe.counit(), coords);
    };
    double mineig = phi_hat_gram_min_eig(dual_pipe, ph);
    CHECK(std::isfinite(mineig));
}
