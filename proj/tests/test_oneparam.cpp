#include <doctest.h>

#include "aqg/oneparam.hpp"
#include "aqg/suq2.hpp"

using namespace aqg;
using suq2::Engine;
using suq2::PbwTerm;

namespace {

SpectralGroup graded_group(const Engine& eng, Engine::Flow f, int degree) {
    SpectralGroup g;
    g.q = eng.q();
    for (const auto& t : Engine::monomials_up_to(degree))
        g.w.push_back(Rational(Engine::flow_exponent(f, t)));
    return g;
}

}  // namespace

TEST_CASE("sigma and tau of the compact instance satisfy the laws exactly") {
    Engine eng(Rational(1, 2), 4);
    auto grid = default_z_grid();
    for (Engine::Flow f : {Engine::Flow::Sigma, Engine::Flow::Tau}) {
        SpectralGroup g = graded_group(eng, f, 3);
        CHECK(group_law_residual(g, grid) == 0.0);
        CHECK(inverse_law_residual(g, grid) == 0.0);
        CHECK(p_operator_residual(g, grid) == 0.0);

        // relative invariance of h: supported lines are the trivial ones
        std::vector<Rational> h;
        for (const auto& t : Engine::monomials_up_to(3)) h.push_back(eng.haar_mono(t));
        auto lr = compute_lambda(g, h);
        CHECK(lr.lambda == Rational(1));
        CHECK(lr.ratio_deviation == 0.0);

        // uniqueness: rebuild from the exact values at i
        std::vector<Rational> at_i(g.dim());
        for (std::size_t j = 0; j < g.dim(); ++j)
            at_i[j] = Rational(1) / g.line_at_minus_i(j);
        auto rebuilt = rebuild_from_value_at_i(g.q, at_i, 64);
        REQUIRE(rebuilt.has_value());
        CHECK(group_agreement_residual(g, *rebuilt, grid) == 0.0);
    }
}

TEST_CASE("P unitarity reflects the Gram grading") {
    Engine eng(Rational(1, 2), 4);
    SpectralGroup tau = graded_group(eng, Engine::Flow::Tau, 2);
    auto gram = eng.gram(2);
    CHECK(p_unitary_on_gram(tau, gram));
    SpectralGroup sigma = graded_group(eng, Engine::Flow::Sigma, 2);
    CHECK(p_unitary_on_gram(sigma, gram));

    // a crafted form coupling lines of different exponent fails
    SpectralGroup g;
    g.q = Rational(1, 2);
    g.w = {Rational(0), Rational(2)};
    std::vector<std::vector<Rational>> bad = {{Rational(1), Rational(1)},
                                              {Rational(1), Rational(1)}};
    CHECK_FALSE(p_unitary_on_gram(g, bad));
}

TEST_CASE("sigma and tau are distinguished by their value at i") {
    Engine eng(Rational(1, 2), 4);
    SpectralGroup s = graded_group(eng, Engine::Flow::Sigma, 2);
    SpectralGroup t = graded_group(eng, Engine::Flow::Tau, 2);
    auto diff = first_difference_at_i(s, t);
    REQUIRE(diff.has_value());
    // the witness line is a monomial with a-grade != 0 and c-grade 0
    auto mons = Engine::monomials_up_to(2);
    const PbwTerm& witness = mons[*diff];
    CHECK(witness.a_grade() != 0);
}

TEST_CASE("default grid covers the named special points") {
    auto g = default_z_grid();
    CHECK(g.size() == 8);
    // contains -i and -i/2
    bool has_minus_i = false, has_minus_i_half = false;
    for (const auto& z : g) {
        if (z == Qc(Rational(0), Rational(-1))) has_minus_i = true;
        if (z == Qc(Rational(0), Rational(-1, 2))) has_minus_i_half = true;
    }
    CHECK(has_minus_i);
    CHECK(has_minus_i_half);
    CHECK(grid_to_string(g).find("1/2+1/3i") != std::string::npos);
}
