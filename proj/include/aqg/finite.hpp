#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aqg/linalg.hpp"
#include "aqg/report.hpp"
#include "aqg/scalars.hpp"

namespace aqg {

// Raised when an input table fails one of the defining axioms; `law` names
// the axiom, `detail` the offending entry.
class StructuralError : public std::runtime_error {
public:
    StructuralError(const std::string& law, const std::string& detail)
        : std::runtime_error(law + ": " + detail), law_(law) {}
    const std::string& law() const { return law_; }

private:
    std::string law_;
};

// Sparse coefficient vector over the basis; zero entries are never stored.
class Element {
public:
    Element() = default;

    static Element basis(std::size_t i) {
        Element e;
        e.coeffs_[i] = Qc(1);
        return e;
    }
    static Element from_dense(const std::vector<Qc>& v);

    void add(std::size_t i, const Qc& c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(i);
        if (it == coeffs_.end()) {
            coeffs_[i] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    const std::map<std::size_t, Qc>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::vector<Qc> dense(std::size_t n) const;

    Element& operator+=(const Element& o) {
        for (const auto& [i, c] : o.coeffs_) add(i, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [i, c] : o.coeffs_) add(i, -c);
        return *this;
    }
    Element scaled(const Qc& s) const {
        Element out;
        if (s.is_zero()) return out;
        for (const auto& [i, c] : coeffs_) out.coeffs_[i] = c * s;
        return out;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend bool operator==(const Element& a, const Element& b) {
        return a.coeffs_ == b.coeffs_;
    }
    double max_abs() const;

private:
    std::map<std::size_t, Qc> coeffs_;
};

// Linear functional as a dense covector; evaluation is the plain pairing.
struct Functional {
    std::vector<Qc> covector;

    Qc operator()(const Element& a) const {
        Qc acc;
        for (const auto& [i, c] : a.coeffs()) acc += covector[i] * c;
        return acc;
    }
    Qc at(std::size_t i) const { return covector[i]; }
};

// A ⊗ A and A ⊗ A ⊗ A in coordinates.
using Tensor2 = std::vector<Qc>;  // size n^2, index j*n + k
using Tensor3 = std::vector<Qc>;  // size n^3

// A finite-dimensional *-algebra with comultiplication, given by tables.
struct AlgebraSpec {
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<std::vector<Element>> mult;  // mult[i][j] = e_i e_j
    std::vector<Element> star;               // star[i] = (e_i)*
    Element unit;
    std::vector<Tensor2> comult;  // comult[i] = Delta(e_i)

    std::string label(std::size_t i) const {
        return i < basis_labels.size() ? basis_labels[i] : "e" + std::to_string(i);
    }

    Element mul(const Element& a, const Element& b) const;
    Element star_of(const Element& a) const;
    Tensor2 comult_of(const Element& a) const;
    Tensor2 tensor_mul(const Tensor2& s, const Tensor2& t) const;
    Tensor2 star_tensor(const Tensor2& t) const;

    // Delta(a)(1 ⊗ b), Delta(a)(b ⊗ 1), (1 ⊗ b)Delta(a), (b ⊗ 1)Delta(a)
    Tensor2 comult_right2(const Element& a, const Element& b) const;
    Tensor2 comult_right1(const Element& a, const Element& b) const;
    Tensor2 comult_left2(const Element& b, const Element& a) const;
    Tensor2 comult_left1(const Element& b, const Element& a) const;

    Element apply_left(const Functional& w, const Tensor2& t) const;   // (w ⊗ id)
    Element apply_right(const Functional& w, const Tensor2& t) const;  // (id ⊗ w)
};

struct ModularData {
    QMat rho;        // weak KMS automorphism, phi(ab) = phi(b rho(a))
    QMat rho_prime;  // counterpart for psi = phi S
    Element delta;   // modular element
    Element delta_inv;
    Qc mu;  // phi S^2 = mu phi
    Qc nu;  // scaling constant of the scaling group; 1 in the finite case
};

struct HaarResult {
    Functional phi;
    QMat gram;              // G(i,j) = phi(e_j^* e_i)
    bool exact_pd = false;  // exact LDL* certificate
    double gram_min_eig = 0.0;
    std::size_t solution_dim = 0;
};

struct GnsData {
    QMat gram;
    QMat nabla;  // matrix of rho, certified positive for the G-inner product
    bool nabla_is_identity = false;
    std::vector<double> nabla_eigenvalues;  // ascending
    const AlgebraSpec* spec = nullptr;
    // Numeric spectral data, used only when nabla != identity.
    std::vector<std::vector<Cx>> eigvecs;
    std::vector<std::vector<Cx>> eigvecs_inv;

    // <Lambda(a), Lambda(b)> = phi(b* a), exact and numeric flavors.
    Qc inner(const std::vector<Qc>& x, const std::vector<Qc>& y) const;
    Cx inner_cx(const std::vector<Cx>& x, const std::vector<Cx>& y) const;
    // nabla^{iz} through the spectral decomposition (identity-exact when the
    // instance is Kac) and the modular conjugation J.
    std::vector<Cx> sigma_apply(const Cx& z, const std::vector<Cx>& x) const;
    std::vector<Cx> j_apply(const std::vector<Cx>& x) const;
};

Report validate_structure(const AlgebraSpec& spec, const ToleranceCfg& cfg = {});

Functional solve_counit(const AlgebraSpec& spec);
QMat solve_antipode(const AlgebraSpec& spec, const Functional& counit);
HaarResult solve_haar(const AlgebraSpec& spec, const ToleranceCfg& cfg = {});
ModularData derive_modular_data(const AlgebraSpec& spec, const Functional& phi,
                                const QMat& antipode);
GnsData gns_build(const AlgebraSpec& spec, const HaarResult& haar, const ModularData& md);

struct DualResult {
    AlgebraSpec dual;
    QMat pairing;      // pairing(m, i) = (e_i phi)(e_m) = phi(e_m e_i)
    QMat pairing_inv;  // solves for dual coordinates
    Functional psi_hat;  // psi_hat(e_k phi) = eps(e_k)
    // phi_hat(psi a) = eps(a); evaluated by solving for the representing a
    QMat psi_shift;  // psi_shift(m, j) = psi(e_m e_j), psi = phi S
};

DualResult dualize(const AlgebraSpec& spec, const Functional& phi, const Functional& counit,
                   const QMat& antipode);

// Lazily computed derivation pipeline over one instance.
class FinitePipeline {
public:
    explicit FinitePipeline(AlgebraSpec spec, ToleranceCfg cfg = {})
        : spec_(std::move(spec)), cfg_(cfg) {}

    const AlgebraSpec& spec() const { return spec_; }
    const ToleranceCfg& cfg() const { return cfg_; }
    const Functional& counit();
    const QMat& antipode();
    const HaarResult& haar();
    const ModularData& modular();
    const GnsData& gns();
    const DualResult& dual();

private:
    AlgebraSpec spec_;
    ToleranceCfg cfg_;
    std::optional<Functional> counit_;
    std::optional<QMat> antipode_;
    std::optional<HaarResult> haar_;
    std::optional<ModularData> modular_;
    std::optional<GnsData> gns_;
    std::optional<DualResult> dual_;
};

}  // namespace aqg
