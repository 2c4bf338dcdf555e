#include "aqg/duality.hpp"

namespace aqg {

Qc dual_eval(const DualResult& d, const std::vector<Qc>& dual_coords,
             const std::vector<Qc>& x) {
    // (sum_k c_k e_k phi)(x) with (e_k phi)(e_m) = pairing(m, k)
    Qc acc;
    std::size_t n = dual_coords.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (dual_coords[k].is_zero()) continue;
        for (std::size_t m = 0; m < n; ++m)
            if (!x[m].is_zero()) acc += dual_coords[k] * x[m] * d.pairing(m, k);
    }
    return acc;
}

std::vector<Qc> dual_antipode_coords(const AlgebraSpec& spec, const DualResult& d,
                                     const QMat& antipode, const std::vector<Qc>& w) {
    std::size_t n = spec.dim;
    std::vector<Qc> covector(n);
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<Qc> sm(n);
        for (std::size_t k = 0; k < n; ++k) sm[k] = antipode(k, m);
        covector[m] = dual_eval(d, w, sm);
    }
    return d.pairing_inv.apply(covector);
}

Qc phi_hat_eval(const DualResult& d, const Functional& counit,
                const std::vector<Qc>& dual_coords) {
    // Find a with w = psi a, i.e. w(e_m) = psi(e_m a) = sum_j psi_shift(m,j) a_j.
    std::vector<Qc> values = d.pairing.apply(dual_coords);
    auto a = solve(d.psi_shift, values);
    if (!a)
        throw StructuralError("dual haar",
                              "functional is not representable in the form psi a");
    Qc acc;
    for (std::size_t j = 0; j < a->size(); ++j) acc += counit.at(j) * (*a)[j];
    return acc;
}

double phi_hat_gram_min_eig(FinitePipeline& dual_pipe,
                            const std::function<Qc(const std::vector<Qc>&)>& phi_hat) {
    const AlgebraSpec& ds = dual_pipe.spec();
    std::size_t n = ds.dim;
    std::vector<std::vector<Cx>> form(n, std::vector<Cx>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element g = ds.mul(ds.star[j], Element::basis(i));
            Qc v = phi_hat(g.dense(n));
            form[j][i] = v.to_cx();  // row j, column i: coefficient of conj(x_j) x_i
        }
    auto eig = hermitian_eigen(form);
    return eig.eigenvalues.front();
}

BidualOutcome bidual_check(FinitePipeline& pipe, FinitePipeline& dual_pipe) {
    BidualOutcome out;
    const AlgebraSpec& a = pipe.spec();
    const DualResult& d1 = pipe.dual();
    const DualResult& d2 = dual_pipe.dual();
    const AlgebraSpec& dd = d2.dual;
    std::size_t n = a.dim;

    // kappa(e_i) has covector row i of the original pairing on the dual basis.
    QMat kappa(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Qc> covector(n);
        for (std::size_t m = 0; m < n; ++m) covector[m] = d1.pairing(i, m);
        auto coords = d2.pairing_inv.apply(covector);
        for (std::size_t k = 0; k < n; ++k) kappa(k, i) = coords[k];
    }

    out.bijective = (rank(kappa) == n);

    auto kappa_of = [&](const Element& x) {
        return kappa.apply(x.dense(n));
    };

    out.multiplicative = true;
    for (std::size_t i = 0; i < n && out.multiplicative; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element prod_in_dd =
                dd.mul(Element::from_dense(kappa_of(Element::basis(i))),
                       Element::from_dense(kappa_of(Element::basis(j))));
            Element expect = Element::from_dense(kappa_of(a.mult[i][j]));
            if (!(prod_in_dd - expect).is_zero()) {
                out.multiplicative = false;
                out.witness = "(" + a.label(i) + "," + a.label(j) + ")";
                break;
            }
        }

    out.star_compatible = true;
    for (std::size_t i = 0; i < n; ++i) {
        Element lhs = dd.star_of(Element::from_dense(kappa_of(Element::basis(i))));
        Element rhs = Element::from_dense(kappa_of(a.star[i]));
        if (!(lhs - rhs).is_zero()) {
            out.star_compatible = false;
            if (out.witness.empty()) out.witness = a.label(i);
            break;
        }
    }

    out.unit_preserved = (Element::from_dense(kappa_of(a.unit)) - dd.unit).is_zero();

    out.comult_intertwined = true;
    for (std::size_t i = 0; i < n && out.comult_intertwined; ++i) {
        // Delta_dd(kappa(e_i)) vs (kappa ⊗ kappa)(Delta_a(e_i))
        Tensor2 lhs = dd.comult_of(Element::from_dense(kappa_of(Element::basis(i))));
        Tensor2 rhs(n * n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Qc& c = a.comult[i][p * n + q];
                if (c.is_zero()) continue;
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t s = 0; s < n; ++s) {
                        Qc f = c * kappa(r, p) * kappa(s, q);
                        if (!f.is_zero()) rhs[r * n + s] += f;
                    }
            }
        for (std::size_t t = 0; t < n * n; ++t)
            if (!(lhs[t] - rhs[t]).is_zero()) {
                out.comult_intertwined = false;
                out.witness = a.label(i);
                break;
            }
    }
    return out;
}

}  // namespace aqg

namespace aqg::suq2 {

QExp ShiftedHaar::eval(const Engine& e, const NcPoly<QExp>& x) const {
    NcPoly<QExp> prod = side == Side::Left ? e.multiply(elem, x) : e.multiply(x, elem);
    return base == Base::H ? e.haar(prod) : e.haar_psi(prod);
}

DualEval as_eval(const Engine& e, const ShiftedHaar& w) {
    return [&e, w](const NcPoly<QExp>& x) { return w.eval(e, x); };
}

DualEval as_eval(const Engine& e, const Character& w) {
    return [&e, w](const NcPoly<QExp>& x) { return w.eval(x); };
}

QExp psi_hat_compact(const Engine& e, const ShiftedHaar& w) {
    if (w.base != ShiftedHaar::Base::H || w.side != ShiftedHaar::Side::Right)
        throw std::domain_error(
            "psi_hat: functional not representable in the Fourier form a h");
    return e.counit(w.elem);
}

QExp phi_hat_compact(const Engine& e, const ShiftedHaar& w) {
    if (w.base != ShiftedHaar::Base::Psi || w.side != ShiftedHaar::Side::Left)
        throw std::domain_error(
            "phi_hat: functional not representable in the form psi a");
    return e.counit(w.elem);
}

QExp dual_mult_eval(const Engine& e, const DualEval& w1, const DualEval& w2,
                    const NcPoly<QExp>& x) {
    QExp acc;
    TensorPoly<QExp> d = e.comultiply(x);
    for (const auto& [key, c] : d.terms()) {
        QExp v1 = w1(NcPoly<QExp>::monomial(key.first));
        if (v1.is_zero()) continue;
        QExp v2 = w2(NcPoly<QExp>::monomial(key.second));
        if (v2.is_zero()) continue;
        acc += c * v1 * v2;
    }
    return acc;
}

QExp dual_star_eval(const Engine& e, const DualEval& w, const NcPoly<QExp>& x) {
    return w(e.star(e.antipode(x))).conj();
}

QExp dual_antipode_eval(const Engine& e, const DualEval& w, const NcPoly<QExp>& x) {
    return w(e.antipode(x));
}

QExp sigma_hat_eval(const Engine& e, const DualEval& w, const Qc& z,
                    const NcPoly<QExp>& x) {
    // sigma^_z(w)(x) = w(tau_z(x) delta^{-iz}); delta = 1 here
    return w(e.flow_apply(Engine::Flow::Tau, z, x));
}

QExp tau_hat_eval(const Engine& e, const DualEval& w, const Qc& z, const NcPoly<QExp>& x) {
    return w(e.flow_apply(Engine::Flow::Tau, z, x));
}

QExp r_hat_eval(const Engine& e, const DualEval& w, const NcPoly<QExp>& x) {
    return w(e.r_map(x));
}

QExp sigma_hat_prime_eval(const Engine& e, const DualEval& w, const Qc& z,
                          const NcPoly<QExp>& x) {
    // sigma^'_z(w)(x) = w(delta^{-iz} tau_{-z}(x)); delta = 1 here
    return w(e.flow_apply(Engine::Flow::Tau, Qc(-z.re, -z.im), x));
}

}  // namespace aqg::suq2
