#include "aqg/finite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace aqg {

Element Element::from_dense(const std::vector<Qc>& v) {
    Element e;
    for (std::size_t i = 0; i < v.size(); ++i) e.add(i, v[i]);
    return e;
}

std::vector<Qc> Element::dense(std::size_t n) const {
    std::vector<Qc> v(n);
    for (const auto& [i, c] : coeffs_) v[i] = c;
    return v;
}

double Element::max_abs() const {
    double m = 0.0;
    for (const auto& [i, c] : coeffs_) m = std::max(m, std::abs(c.to_cx()));
    return m;
}

Element AlgebraSpec::mul(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [i, ca] : a.coeffs())
        for (const auto& [j, cb] : b.coeffs()) {
            Qc f = ca * cb;
            for (const auto& [k, s] : mult[i][j].coeffs()) out.add(k, f * s);
        }
    return out;
}

Element AlgebraSpec::star_of(const Element& a) const {
    Element out;
    for (const auto& [i, c] : a.coeffs()) {
        Qc f = c.conj();
        for (const auto& [k, s] : star[i].coeffs()) out.add(k, f * s);
    }
    return out;
}

Tensor2 AlgebraSpec::comult_of(const Element& a) const {
    Tensor2 out(dim * dim);
    for (const auto& [i, c] : a.coeffs())
        for (std::size_t t = 0; t < dim * dim; ++t)
            if (!comult[i][t].is_zero()) out[t] += c * comult[i][t];
    return out;
}

Tensor2 AlgebraSpec::tensor_mul(const Tensor2& s, const Tensor2& t) const {
    Tensor2 out(dim * dim);
    for (std::size_t j1 = 0; j1 < dim; ++j1)
        for (std::size_t k1 = 0; k1 < dim; ++k1) {
            const Qc& c1 = s[j1 * dim + k1];
            if (c1.is_zero()) continue;
            for (std::size_t j2 = 0; j2 < dim; ++j2)
                for (std::size_t k2 = 0; k2 < dim; ++k2) {
                    const Qc& c2 = t[j2 * dim + k2];
                    if (c2.is_zero()) continue;
                    Qc f = c1 * c2;
                    for (const auto& [l, cl] : mult[j1][j2].coeffs())
                        for (const auto& [r, cr] : mult[k1][k2].coeffs())
                            out[l * dim + r] += f * cl * cr;
                }
        }
    return out;
}

Tensor2 AlgebraSpec::star_tensor(const Tensor2& t) const {
    Tensor2 out(dim * dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
            const Qc& c = t[j * dim + k];
            if (c.is_zero()) continue;
            Qc f = c.conj();
            for (const auto& [l, cl] : star[j].coeffs())
                for (const auto& [r, cr] : star[k].coeffs())
                    out[l * dim + r] += f * cl * cr;
        }
    return out;
}

Tensor2 AlgebraSpec::comult_right2(const Element& a, const Element& b) const {
    Tensor2 d = comult_of(a);
    Tensor2 out(dim * dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
            const Qc& c = d[j * dim + k];
            if (c.is_zero()) continue;
            Element kb = mul(Element::basis(k), b);
            for (const auto& [m, cm] : kb.coeffs()) out[j * dim + m] += c * cm;
        }
    return out;
}

Tensor2 AlgebraSpec::comult_right1(const Element& a, const Element& b) const {
    Tensor2 d = comult_of(a);
    Tensor2 out(dim * dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
            const Qc& c = d[j * dim + k];
            if (c.is_zero()) continue;
            Element jb = mul(Element::basis(j), b);
            for (const auto& [m, cm] : jb.coeffs()) out[m * dim + k] += c * cm;
        }
    return out;
}

Tensor2 AlgebraSpec::comult_left2(const Element& b, const Element& a) const {
    Tensor2 d = comult_of(a);
    Tensor2 out(dim * dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
            const Qc& c = d[j * dim + k];
            if (c.is_zero()) continue;
            Element bk = mul(b, Element::basis(k));
            for (const auto& [m, cm] : bk.coeffs()) out[j * dim + m] += c * cm;
        }
    return out;
}

Tensor2 AlgebraSpec::comult_left1(const Element& b, const Element& a) const {
    Tensor2 d = comult_of(a);
    Tensor2 out(dim * dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
            const Qc& c = d[j * dim + k];
            if (c.is_zero()) continue;
            Element bj = mul(b, Element::basis(j));
            for (const auto& [m, cm] : bj.coeffs()) out[m * dim + k] += c * cm;
        }
    return out;
}

Element AlgebraSpec::apply_left(const Functional& w, const Tensor2& t) const {
    Element out;
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
            const Qc& c = t[j * dim + k];
            if (!c.is_zero()) out.add(k, c * w.at(j));
        }
    return out;
}

Element AlgebraSpec::apply_right(const Functional& w, const Tensor2& t) const {
    Element out;
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
            const Qc& c = t[j * dim + k];
            if (!c.is_zero()) out.add(j, c * w.at(k));
        }
    return out;
}

namespace {

double tensor_max_abs(const Tensor2& t) {
    double m = 0.0;
    for (const auto& c : t) m = std::max(m, std::abs(c.to_cx()));
    return m;
}

bool tensor_is_zero(const Tensor2& t) {
    for (const auto& c : t)
        if (!c.is_zero()) return false;
    return true;
}

Tensor2 tensor_diff(const Tensor2& a, const Tensor2& b) {
    Tensor2 d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

CheckEntry exact_entry(std::string id, std::string anchor, bool exact_zero, double magnitude,
                       std::optional<std::string> witness = {}) {
    CheckEntry e;
    e.id = std::move(id);
    e.anchor = std::move(anchor);
    e.residual = exact_zero ? 0.0 : std::max(magnitude, 1e-300);
    e.pass = exact_zero;
    if (!exact_zero) e.witness = std::move(witness);
    return e;
}

// Accumulates the worst case of an exact check over many inputs.
struct Worst {
    bool ok = true;
    double mag = 0.0;
    std::string witness;
    void feed(bool zero, double magnitude, const std::string& w) {
        if (!zero) {
            if (ok || magnitude > mag) witness = w;
            ok = false;
            mag = std::max(mag, magnitude);
        }
    }
    CheckEntry entry(std::string id, std::string anchor) const {
        return exact_entry(std::move(id), std::move(anchor), ok, mag,
                           ok ? std::optional<std::string>{} : std::optional<std::string>{witness});
    }
};

}  // namespace

Report validate_structure(const AlgebraSpec& spec, const ToleranceCfg&) {
    const std::size_t n = spec.dim;
    Report rep;
    rep.suite = "validate";

    Worst assoc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Element lhs = spec.mul(spec.mult[i][j], Element::basis(k));
                Element rhs = spec.mul(Element::basis(i), spec.mult[j][k]);
                Element d = lhs - rhs;
                assoc.feed(d.is_zero(), d.max_abs(),
                           "(" + spec.label(i) + "," + spec.label(j) + "," + spec.label(k) + ")");
            }
    rep.add(assoc.entry("structure.associativity", "(ab)c = a(bc) on all basis triples"));

    Worst unit;
    for (std::size_t i = 0; i < n; ++i) {
        Element l = spec.mul(spec.unit, Element::basis(i)) - Element::basis(i);
        Element r = spec.mul(Element::basis(i), spec.unit) - Element::basis(i);
        unit.feed(l.is_zero() && r.is_zero(), std::max(l.max_abs(), r.max_abs()), spec.label(i));
    }
    rep.add(unit.entry("structure.unit", "1a = a1 = a"));

    Worst star_inv, star_anti;
    for (std::size_t i = 0; i < n; ++i) {
        Element d = spec.star_of(spec.star[i]) - Element::basis(i);
        star_inv.feed(d.is_zero(), d.max_abs(), spec.label(i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element lhs = spec.star_of(spec.mult[i][j]);
            Element rhs = spec.mul(spec.star[j], spec.star[i]);
            Element d = lhs - rhs;
            star_anti.feed(d.is_zero(), d.max_abs(),
                           "(" + spec.label(i) + "," + spec.label(j) + ")");
        }
    rep.add(star_inv.entry("structure.star_involution", "a** = a"));
    rep.add(star_anti.entry("structure.star_antimultiplicative", "(ab)* = b* a*"));

    {
        Tensor2 du = spec.comult_of(spec.unit);
        Tensor2 uu(n * n);
        for (const auto& [j, cj] : spec.unit.coeffs())
            for (const auto& [k, ck] : spec.unit.coeffs()) uu[j * n + k] += cj * ck;
        Tensor2 d = tensor_diff(du, uu);
        rep.add(exact_entry("structure.comult_unital", "Delta(1) = 1 ⊗ 1", tensor_is_zero(d),
                            tensor_max_abs(d)));
    }

    Worst hom, comult_star;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Tensor2 lhs = spec.comult_of(spec.mult[i][j]);
            Tensor2 rhs = spec.tensor_mul(spec.comult[i], spec.comult[j]);
            Tensor2 d = tensor_diff(lhs, rhs);
            hom.feed(tensor_is_zero(d), tensor_max_abs(d),
                     "(" + spec.label(i) + "," + spec.label(j) + ")");
        }
        Tensor2 ls = spec.comult_of(spec.star[i]);
        Tensor2 rs = spec.star_tensor(spec.comult[i]);
        Tensor2 d = tensor_diff(ls, rs);
        comult_star.feed(tensor_is_zero(d), tensor_max_abs(d), spec.label(i));
    }
    rep.add(hom.entry("structure.comult_homomorphism", "Delta(ab) = Delta(a)Delta(b)"));
    rep.add(comult_star.entry("structure.comult_star", "Delta(a*) = Delta(a)*"));

    Worst coassoc;
    for (std::size_t i = 0; i < n; ++i) {
        // (Delta ⊗ id) and (id ⊗ Delta) applied to Delta(e_i), in A ⊗ A ⊗ A
        Tensor3 lhs(n * n * n), rhs(n * n * n);
        const Tensor2& d = spec.comult[i];
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Qc& c = d[j * n + k];
                if (c.is_zero()) continue;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        const Qc& cj = spec.comult[j][p * n + q];
                        if (!cj.is_zero()) lhs[(p * n + q) * n + k] += c * cj;
                        const Qc& ck = spec.comult[k][p * n + q];
                        if (!ck.is_zero()) rhs[(j * n + p) * n + q] += c * ck;
                    }
            }
        bool zero = true;
        double mag = 0.0;
        for (std::size_t t = 0; t < lhs.size(); ++t) {
            Qc diff = lhs[t] - rhs[t];
            if (!diff.is_zero()) {
                zero = false;
                mag = std::max(mag, std::abs(diff.to_cx()));
            }
        }
        coassoc.feed(zero, mag, spec.label(i));
    }
    rep.add(coassoc.entry("structure.coassociativity",
                          "(Delta ⊗ id)Delta = (id ⊗ Delta)Delta"));

    // T1(a ⊗ b) = Delta(a)(b ⊗ 1) and T2(a ⊗ b) = Delta(a)(1 ⊗ b) as
    // n^2 x n^2 matrices; both must have full rank.
    QMat t1(n * n, n * n), t2(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Tensor2 c1 = spec.comult_right1(Element::basis(i), Element::basis(j));
            Tensor2 c2 = spec.comult_right2(Element::basis(i), Element::basis(j));
            for (std::size_t r = 0; r < n * n; ++r) {
                t1(r, i * n + j) = c1[r];
                t2(r, i * n + j) = c2[r];
            }
        }
    std::size_t r1 = rank(t1), r2 = rank(t2);
    rep.add(CheckEntry::flag("structure.t1_bijective",
                             "T1(a ⊗ b) = Delta(a)(b ⊗ 1) has full rank " +
                                 std::to_string(n * n),
                             r1 == n * n, "rank " + std::to_string(r1)));
    rep.add(CheckEntry::flag("structure.t2_bijective",
                             "T2(a ⊗ b) = Delta(a)(1 ⊗ b) has full rank " +
                                 std::to_string(n * n),
                             r2 == n * n, "rank " + std::to_string(r2)));
    return rep;
}

Functional solve_counit(const AlgebraSpec& spec) {
    const std::size_t n = spec.dim;
    // (eps ⊗ id)Delta(e_i) = e_i and (id ⊗ eps)Delta(e_i) = e_i, stacked.
    QMat m(2 * n * n, n);
    std::vector<Qc> rhs(2 * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i * n + k, j) += spec.comult[i][j * n + k];
                m(n * n + i * n + k, j) += spec.comult[i][k * n + j];
            }
            rhs[i * n + k] = (i == k) ? Qc(1) : Qc(0);
            rhs[n * n + i * n + k] = (i == k) ? Qc(1) : Qc(0);
        }
    if (rank(m) != n)
        throw StructuralError("counit", "counit system is underdetermined");
    auto sol = solve(m, rhs);
    if (!sol)
        throw StructuralError("counit",
                              "not a multiplier Hopf algebra: counit equations inconsistent");
    Functional eps{*sol};
    // eps must be a *-homomorphism
    for (std::size_t i = 0; i < n; ++i) {
        if (eps(spec.star_of(Element::basis(i))) != eps.at(i).conj())
            throw StructuralError("counit", "solved counit is not *-compatible at " +
                                                spec.label(i));
        for (std::size_t j = 0; j < n; ++j)
            if (eps(spec.mult[i][j]) != eps.at(i) * eps.at(j))
                throw StructuralError("counit", "solved counit not multiplicative at (" +
                                                    spec.label(i) + "," + spec.label(j) + ")");
    }
    if (eps(spec.unit) != Qc(1))
        throw StructuralError("counit", "eps(1) != 1");
    return eps;
}

QMat solve_antipode(const AlgebraSpec& spec, const Functional& counit) {
    const std::size_t n = spec.dim;
    // m(S ⊗ id)(Delta(a)(1 ⊗ b)) = eps(a) b for all basis a, b.
    // Unknowns s_{k,p} with S(e_p) = sum_k s_{k,p} e_k, flattened as p*n + k.
    QMat m(n * n * n, n * n);
    std::vector<Qc> rhs(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Tensor2 t = spec.comult_right2(Element::basis(i), Element::basis(j));
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t r = 0; r < n; ++r) {
                    const Qc& c = t[p * n + r];
                    if (c.is_zero()) continue;
                    for (std::size_t k = 0; k < n; ++k)
                        for (const auto& [mm, cm] : spec.mult[k][r].coeffs())
                            m((i * n + j) * n + mm, p * n + k) += c * cm;
                }
            rhs[(i * n + j) * n + j] += counit.at(i);
        }
    if (rank(m) != n * n)
        throw StructuralError("antipode", "antipode system is underdetermined");
    auto sol = solve(m, rhs);
    if (!sol) throw StructuralError("antipode", "antipode does not exist");
    QMat s(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t k = 0; k < n; ++k) s(k, p) = (*sol)[p * n + k];

    // Second defining equation: m(id ⊗ S)((b ⊗ 1)Delta(a)) = eps(a) b.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Tensor2 t = spec.comult_left1(Element::basis(j), Element::basis(i));
            Element acc;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t r = 0; r < n; ++r) {
                    const Qc& c = t[p * n + r];
                    if (c.is_zero()) continue;
                    Element sr;
                    for (std::size_t k = 0; k < n; ++k) sr.add(k, s(k, r));
                    acc += spec.mul(Element::basis(p), sr).scaled(c);
                }
            Element want = Element::basis(j).scaled(counit.at(i));
            if (!(acc - want).is_zero())
                throw StructuralError("antipode",
                                      "m(id ⊗ S)((b ⊗ 1)Delta(a)) = eps(a) b fails at (" +
                                          spec.label(i) + "," + spec.label(j) + ")");
        }
    return s;
}

HaarResult solve_haar(const AlgebraSpec& spec, const ToleranceCfg& cfg) {
    const std::size_t n = spec.dim;
    // (id ⊗ phi)Delta(e_i) = phi(e_i) 1, homogeneous in the covector phi.
    QMat m(n * n, n);
    std::vector<Qc> u = spec.unit.dense(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                m(i * n + j, k) += spec.comult[i][j * n + k];
            m(i * n + j, i) -= u[j];
        }
    auto basis = nullspace(std::move(m));
    if (basis.size() != 1)
        throw StructuralError("haar", "left invariance solution space has dimension " +
                                          std::to_string(basis.size()) +
                                          " (no/ambiguous Haar functional)");
    Functional phi{basis[0]};
    Qc norm = phi(spec.unit);
    if (norm.is_zero())
        throw StructuralError("haar", "invariant functional vanishes on the unit");
    for (auto& c : phi.covector) c /= norm;

    HaarResult out;
    out.solution_dim = basis.size();
    out.phi = phi;
    out.gram = QMat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.gram(i, j) = phi(spec.mul(spec.star[j], Element::basis(i)));
    // The sesquilinear form matrix is the transpose of G (so that
    // phi(a* a) = x^H form x for the coordinate vector x of a).
    QMat form(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) form(j, i) = out.gram(i, j);
    bool hermitian = (form.conj_transpose() == form);
    out.exact_pd = hermitian && hermitian_positive_definite(form);
    std::vector<std::vector<Cx>> gd(n, std::vector<Cx>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gd[i][j] = form(i, j).to_cx();
    auto eig = hermitian_eigen(gd);
    out.gram_min_eig = eig.eigenvalues.front();
    if (!out.exact_pd && out.gram_min_eig < cfg.psd_floor)
        throw StructuralError("haar", "Haar functional not positive (Gram min eigenvalue " +
                                          format_double(out.gram_min_eig) + ")");
    return out;
}

ModularData derive_modular_data(const AlgebraSpec& spec, const Functional& phi,
                                const QMat& antipode) {
    const std::size_t n = spec.dim;
    ModularData md;

    // rho from phi(e_j rho(e_i)) = phi(e_i e_j) for all j.
    QMat b(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) b(j, k) = phi(spec.mult[j][k]);
    md.rho = QMat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Qc> rhs(n);
        for (std::size_t j = 0; j < n; ++j) rhs[j] = phi(spec.mult[i][j]);
        auto col = solve(b, rhs);
        if (!col)
            throw StructuralError("weak KMS",
                                  "phi(ab) = phi(b rho(a)) has no solution at " + spec.label(i));
        for (std::size_t k = 0; k < n; ++k) md.rho(k, i) = (*col)[k];
    }

    // delta from (phi ⊗ id)(Delta(a)(1 ⊗ b)) = phi(a) delta b, stacked over
    // all basis pairs and solved in the least-squares sense; the residual is
    // then required to vanish exactly.
    QMat dm(n * n * n, n);
    std::vector<Qc> drhs(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Tensor2 t = spec.comult_right2(Element::basis(i), Element::basis(j));
            Element lhs = spec.apply_left(phi, t);
            for (const auto& [mm, c] : lhs.coeffs()) drhs[(i * n + j) * n + mm] = c;
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& [mm, cm] : spec.mult[k][j].coeffs())
                    dm((i * n + j) * n + mm, k) += phi.at(i) * cm;
        }
    auto dsol = least_squares(dm, drhs);
    std::vector<Qc> resid = dm.apply(dsol);
    for (std::size_t r = 0; r < resid.size(); ++r) resid[r] -= drhs[r];
    for (const auto& c : resid)
        if (!c.is_zero())
            throw StructuralError("modular element",
                                  "(phi ⊗ id)(Delta(a)(1 ⊗ b)) = phi(a) delta b inconsistent");
    md.delta = Element::from_dense(dsol);

    // delta must be invertible
    QMat lm(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Element dk = spec.mul(md.delta, Element::basis(k));
        auto col = dk.dense(n);
        for (std::size_t mI = 0; mI < n; ++mI) lm(mI, k) = col[mI];
    }
    auto inv = solve(lm, spec.unit.dense(n));
    if (!inv) throw StructuralError("modular element", "delta is not invertible");
    md.delta_inv = Element::from_dense(*inv);
    if (!(spec.mul(md.delta_inv, md.delta) - spec.unit).is_zero())
        throw StructuralError("modular element", "delta inverse is one-sided only");

    // mu from phi(S^2(a)) = mu phi(a) on a spanning set, constancy asserted.
    QMat s2 = antipode * antipode;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
        Qc pa = phi.at(i);
        Element s2i;
        for (std::size_t k = 0; k < n; ++k) s2i.add(k, s2(k, i));
        Qc ps = phi(s2i);
        if (!found && !pa.is_zero()) {
            md.mu = ps / pa;
            found = true;
        }
    }
    if (!found) throw StructuralError("antipode square", "phi vanishes on the whole basis");
    for (std::size_t i = 0; i < n; ++i) {
        Element s2i;
        for (std::size_t k = 0; k < n; ++k) s2i.add(k, s2(k, i));
        if (phi(s2i) != md.mu * phi.at(i))
            throw StructuralError("antipode square",
                                  "phi S^2 = mu phi is not constant at " + spec.label(i));
    }
    if (md.mu * md.mu.conj() != Qc(1))
        throw StructuralError("antipode square", "|mu| != 1");

    // rho'(a) = delta rho(a) delta^{-1}
    md.rho_prime = QMat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Element ri;
        for (std::size_t k = 0; k < n; ++k) ri.add(k, md.rho(k, i));
        Element rp = spec.mul(spec.mul(md.delta, ri), md.delta_inv);
        auto col = rp.dense(n);
        for (std::size_t k = 0; k < n; ++k) md.rho_prime(k, i) = col[k];
    }

    md.nu = Qc(1);  // scaling constant; trivial in finite dimension
    return md;
}

namespace {

// Complex Cholesky factor L (lower) of a Hermitian positive definite matrix.
std::vector<std::vector<Cx>> cholesky(const std::vector<std::vector<Cx>>& m) {
    std::size_t n = m.size();
    std::vector<std::vector<Cx>> l(n, std::vector<Cx>(n, Cx(0, 0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Cx s = m[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * std::conj(l[j][k]);
            if (i == j) {
                double d = s.real();
                if (d <= 0) throw StructuralError("gns", "Gram matrix not positive definite");
                l[i][i] = Cx(std::sqrt(d), 0);
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    return l;
}

// Solves L^H x = b for upper-triangular L^H.
std::vector<Cx> back_subst_herm(const std::vector<std::vector<Cx>>& l, std::vector<Cx> b) {
    std::size_t n = l.size();
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) b[i] -= std::conj(l[k][i]) * b[k];
        b[i] /= std::conj(l[i][i]);
    }
    return b;
}

}  // namespace

Qc GnsData::inner(const std::vector<Qc>& x, const std::vector<Qc>& y) const {
    // <Lambda(a), Lambda(b)> = phi(b* a) = sum conj(y_j) G(i,j) x_i
    Qc acc;
    std::size_t n = gram.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) acc += y[j].conj() * gram(i, j) * x[i];
    }
    return acc;
}

Cx GnsData::inner_cx(const std::vector<Cx>& x, const std::vector<Cx>& y) const {
    Cx acc(0, 0);
    std::size_t n = gram.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            acc += std::conj(y[j]) * gram(i, j).to_cx() * x[i];
    return acc;
}

std::vector<Cx> GnsData::sigma_apply(const Cx& z, const std::vector<Cx>& x) const {
    std::size_t n = gram.rows();
    if (nabla_is_identity) return x;
    // nabla^{iz} x = V diag(d^{iz}) V^{-1} x
    std::vector<Cx> c(n, Cx(0, 0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) c[k] += eigvecs_inv[k][j] * x[j];
    for (std::size_t k = 0; k < n; ++k) {
        double d = nabla_eigenvalues[k];
        Cx e = std::exp(Cx(0, 1) * z * std::log(d));
        c[k] *= e;
    }
    std::vector<Cx> out(n, Cx(0, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[j] += eigvecs[k][j] * c[k];
    return out;
}

std::vector<Cx> GnsData::j_apply(const std::vector<Cx>& x) const {
    // J Lambda(a) = Lambda(sigma_{i/2}(a)*); sigma_{i/2} = nabla^{-1/2}
    std::vector<Cx> half = sigma_apply(Cx(0, 0.5), x);
    std::size_t n = gram.rows();
    std::vector<Cx> out(n, Cx(0, 0));
    for (std::size_t i = 0; i < n; ++i) {
        Cx c = std::conj(half[i]);
        for (const auto& [k, s] : spec->star[i].coeffs()) out[k] += c * s.to_cx();
    }
    return out;
}

GnsData gns_build(const AlgebraSpec& spec, const HaarResult& haar, const ModularData& md) {
    const std::size_t n = spec.dim;
    GnsData g;
    g.spec = &spec;
    g.gram = haar.gram;
    g.nabla = md.rho;

    // nabla must be selfadjoint for the G-inner product: ⟨∇x, y⟩ = ⟨x, ∇y⟩.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Qc> ei(n), ej(n);
            ei[i] = Qc(1);
            ej[j] = Qc(1);
            if (g.inner(g.nabla.apply(ei), ej) != g.inner(ei, g.nabla.apply(ej)))
                throw StructuralError(
                    "gns", "modular operator is not selfadjoint for the GNS inner product");
        }

    g.nabla_is_identity = (g.nabla == QMat::identity(n));
    if (g.nabla_is_identity) {
        g.nabla_eigenvalues.assign(n, 1.0);
        return g;
    }

    // Numeric spectral decomposition in the G-inner product: with the form
    // matrix M = G^T = L L^H, B = L^H nabla L^{-H} is Hermitian.
    std::vector<std::vector<Cx>> mform(n, std::vector<Cx>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mform[i][j] = g.gram(j, i).to_cx();
    auto l = cholesky(mform);
    std::vector<std::vector<Cx>> nab(n, std::vector<Cx>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) nab[i][j] = g.nabla(i, j).to_cx();
    // B = L^H nabla L^{-H}: columns of L^{-H} via back substitution.
    std::vector<std::vector<Cx>> bmat(n, std::vector<Cx>(n, Cx(0, 0)));
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<Cx> e(n, Cx(0, 0));
        e[col] = Cx(1, 0);
        auto linv = back_subst_herm(l, e);  // L^{-H} e_col
        std::vector<Cx> ncol(n, Cx(0, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) ncol[i] += nab[i][j] * linv[j];
        for (std::size_t i = 0; i < n; ++i) {
            Cx s(0, 0);
            for (std::size_t j = 0; j < n; ++j) s += std::conj(l[j][i]) * ncol[j];
            bmat[i][col] = s;
        }
    }
    auto eig = hermitian_eigen(bmat);
    for (double d : eig.eigenvalues)
        if (d <= 0)
            throw StructuralError("gns",
                                  "modular automorphism not positive — phi is not a positive "
                                  "faithful functional");
    g.nabla_eigenvalues = eig.eigenvalues;
    g.eigvecs.assign(n, std::vector<Cx>(n));
    g.eigvecs_inv.assign(n, std::vector<Cx>(n));
    for (std::size_t k = 0; k < n; ++k) {
        g.eigvecs[k] = back_subst_herm(l, eig.eigenvectors[k]);  // v_k = L^{-H} u_k
        // row k of V^{-1} = U^H L^H
        for (std::size_t j = 0; j < n; ++j) {
            Cx s(0, 0);
            for (std::size_t i = 0; i < n; ++i)
                s += std::conj(eig.eigenvectors[k][i]) * std::conj(l[j][i]);
            g.eigvecs_inv[k][j] = s;
        }
    }
    return g;
}

DualResult dualize(const AlgebraSpec& spec, const Functional& phi, const Functional& counit,
                   const QMat& antipode) {
    const std::size_t n = spec.dim;
    DualResult out;

    out.pairing = QMat(n, n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i) out.pairing(m, i) = phi(spec.mult[m][i]);
    auto pinv = inverse(out.pairing);
    if (!pinv)
        throw StructuralError("duality",
                              "pairing a ↦ a phi is not bijective (phi not faithful?)");
    out.pairing_inv = *pinv;

    AlgebraSpec dual;
    dual.dim = n;
    dual.basis_labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) dual.basis_labels[i] = spec.label(i) + "^";

    auto to_dual_coords = [&](const std::vector<Qc>& covector) {
        return out.pairing_inv.apply(covector);
    };

    // Product: (w1 w2)(x) = (w1 ⊗ w2)(Delta(x)).
    dual.mult.assign(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Qc> f(n);
            for (std::size_t m = 0; m < n; ++m) {
                const Tensor2& d = spec.comult[m];
                Qc acc;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        const Qc& c = d[p * n + q];
                        if (!c.is_zero()) acc += c * out.pairing(p, i) * out.pairing(q, j);
                    }
                f[m] = acc;
            }
            dual.mult[i][j] = Element::from_dense(to_dual_coords(f));
        }
    }

    // Star: w*(x) = conj(w(S(x)*)).
    dual.star.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Qc> f(n);
        for (std::size_t m = 0; m < n; ++m) {
            Element sm;
            for (std::size_t k = 0; k < n; ++k) sm.add(k, antipode(k, m));
            Element smstar = spec.star_of(sm);
            Qc val;
            for (const auto& [p, c] : smstar.coeffs()) val += c * out.pairing(p, i);
            f[m] = val.conj();
        }
        dual.star[i] = Element::from_dense(to_dual_coords(f));
    }

    // Unit of the dual is the counit of A.
    dual.unit = Element::from_dense(to_dual_coords(counit.covector));

    // Comultiplication: Delta^(w)(x ⊗ y) = w(xy). With R(p,q) = e_i^(e_p e_q)
    // the coefficient matrix T solves P T P^T = R, so T = P^{-1} R P^{-T}.
    dual.comult.assign(n, Tensor2(n * n));
    QMat pinv_t(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) pinv_t(a, b) = out.pairing_inv(b, a);
    for (std::size_t i = 0; i < n; ++i) {
        QMat r(n, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                Qc val;
                for (const auto& [m, c] : spec.mult[p][q].coeffs())
                    val += c * out.pairing(m, i);
                r(p, q) = val;
            }
        QMat t = out.pairing_inv * r * pinv_t;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) dual.comult[i][j * n + k] = t(j, k);
    }

    out.psi_hat = Functional{counit.covector};

    out.psi_shift = QMat(n, n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t j = 0; j < n; ++j) {
            // psi(e_m e_j) with psi = phi S
            Element smj;
            for (const auto& [k, c] : spec.mult[m][j].coeffs()) {
                Element sk;
                for (std::size_t p = 0; p < n; ++p) sk.add(p, antipode(p, k));
                smj += sk.scaled(c);
            }
            out.psi_shift(m, j) = phi(smj);
        }

    out.dual = std::move(dual);
    return out;
}

const Functional& FinitePipeline::counit() {
    if (!counit_) counit_ = solve_counit(spec_);
    return *counit_;
}

const QMat& FinitePipeline::antipode() {
    if (!antipode_) antipode_ = solve_antipode(spec_, counit());
    return *antipode_;
}

const HaarResult& FinitePipeline::haar() {
    if (!haar_) haar_ = solve_haar(spec_, cfg_);
    return *haar_;
}

const ModularData& FinitePipeline::modular() {
    if (!modular_) modular_ = derive_modular_data(spec_, haar().phi, antipode());
    return *modular_;
}

const GnsData& FinitePipeline::gns() {
    if (!gns_) gns_ = gns_build(spec_, haar(), modular());
    return *gns_;
}

const DualResult& FinitePipeline::dual() {
    if (!dual_) dual_ = dualize(spec_, haar().phi, counit(), antipode());
    return *dual_;
}

}  // namespace aqg
