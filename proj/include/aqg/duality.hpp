#pragma once

#include <functional>
#include <string>
#include <vector>

#include "aqg/finite.hpp"
#include "aqg/suq2.hpp"

namespace aqg {

// --- finite engine -------------------------------------------------------

// Evaluate a dual element (coordinates in the e_i phi basis) on x in A.
Qc dual_eval(const DualResult& d, const std::vector<Qc>& dual_coords,
             const std::vector<Qc>& x);

// Fourier transform a ↦ a phi. In the e_i phi coordinates this is the
// identity on coefficient vectors; kept explicit for readability at call
// sites.
inline std::vector<Qc> fourier_coords(const std::vector<Qc>& a) { return a; }

// S^(w)(x) = w(S(x)) as coordinates of a dual element.
std::vector<Qc> dual_antipode_coords(const AlgebraSpec& spec, const DualResult& d,
                                     const QMat& antipode, const std::vector<Qc>& w);

// phi^(psi a) = eps(a): solves for the representing element a.
Qc phi_hat_eval(const DualResult& d, const Functional& counit,
                const std::vector<Qc>& dual_coords);

// Exploratory evidence for the open positivity question: min eigenvalue of
// the phi^ Gram matrix on the dual basis.
double phi_hat_gram_min_eig(FinitePipeline& dual_pipe,
                            const std::function<Qc(const std::vector<Qc>&)>& phi_hat);

struct BidualOutcome {
    bool bijective = false;
    bool multiplicative = false;
    bool star_compatible = false;
    bool comult_intertwined = false;
    bool unit_preserved = false;
    std::string witness;
    bool ok() const {
        return bijective && multiplicative && star_compatible && comult_intertwined &&
               unit_preserved;
    }
};

// Canonical map A -> (A^)^ given by evaluation, verified to be an exact
// *-isomorphism intertwining the comultiplications.
BidualOutcome bidual_check(FinitePipeline& pipe, FinitePipeline& dual_pipe);

}  // namespace aqg

namespace aqg::suq2 {

// Dual elements of the compact instance are never materialized; they are
// evaluation procedures over shifted-Haar representations a·h, h·a, psi·a.
struct ShiftedHaar {
    enum class Base { H, Psi };
    enum class Side { Left, Right };  // Left: w(x) = base(elem x); Right: base(x elem)

    NcPoly<QExp> elem;
    Base base = Base::H;
    Side side = Side::Right;

    static ShiftedHaar fourier(const NcPoly<QExp>& a) {
        // a ↦ a h, i.e. w(x) = h(x a)
        return {a, Base::H, Side::Right};
    }
    static ShiftedHaar psi_shift(const NcPoly<QExp>& a) {
        // psi a, i.e. w(x) = psi(a x)
        return {a, Base::Psi, Side::Left};
    }

    QExp eval(const Engine& e, const NcPoly<QExp>& x) const;
};

using DualEval = std::function<QExp(const NcPoly<QExp>&)>;

DualEval as_eval(const Engine& e, const ShiftedHaar& w);
DualEval as_eval(const Engine& e, const Character& w);

// psi^(a h) = eps(a) and phi^(psi a) = eps(a), for dual elements given in the
// matching shifted-Haar form; other forms raise "not representable".
QExp psi_hat_compact(const Engine& e, const ShiftedHaar& w);
QExp phi_hat_compact(const Engine& e, const ShiftedHaar& w);

// (w1 w2)(x) = (w1 ⊗ w2)(Delta(x))
QExp dual_mult_eval(const Engine& e, const DualEval& w1, const DualEval& w2,
                    const NcPoly<QExp>& x);
// w*(x) = conj(w(S(x)*))
QExp dual_star_eval(const Engine& e, const DualEval& w, const NcPoly<QExp>& x);
// S^(w)(x) = w(S(x))
QExp dual_antipode_eval(const Engine& e, const DualEval& w, const NcPoly<QExp>& x);

// The dual analytic dictionary; delta = 1 for this compact
// instance, so the delta powers in the defining formulas are the unit.
QExp sigma_hat_eval(const Engine& e, const DualEval& w, const Qc& z, const NcPoly<QExp>& x);
QExp tau_hat_eval(const Engine& e, const DualEval& w, const Qc& z, const NcPoly<QExp>& x);
QExp r_hat_eval(const Engine& e, const DualEval& w, const NcPoly<QExp>& x);
QExp sigma_hat_prime_eval(const Engine& e, const DualEval& w, const Qc& z,
                          const NcPoly<QExp>& x);

}  // namespace aqg::suq2
