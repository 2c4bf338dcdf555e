#pragma once

#include <optional>
#include <vector>

#include "aqg/qexp.hpp"
#include "aqg/scalars.hpp"

namespace aqg {

// An analytic one-parameter group in spectral form: diagonal in a fixed
// coordinate basis with strictly positive eigenvalues q^{w_j}, evaluated by
// complex spectral powers alpha_z = (eigenvalue)^{iz}. Exponents are kept
// exact so that the group law, the relative-invariance law and the P-operator
// law are decided by exact exponent arithmetic.
struct SpectralGroup {
    Rational q;                    // base of the eigenvalue powers
    std::vector<Rational> w;       // eigenvalue of line j is q^{w_j}
    Rational lambda = Rational(1); // scaling constant, set by compute_lambda

    std::size_t dim() const { return w.size(); }

    // The scalar alpha_z acts by on line j, as an exact q-power.
    QExp line_scale(std::size_t j, const Qc& z) const {
        Qc iz(-z.im, z.re);
        return QExp::power(q, Qc(w[j] * iz.re, w[j] * iz.im));
    }
    // Value of alpha_{-i} on line j (the positive generator), exact.
    Rational line_at_minus_i(std::size_t j) const;

    std::vector<QExp> apply(const Qc& z, const std::vector<QExp>& x) const;
};

struct LambdaResult {
    Rational lambda;          // exact; 1 whenever the functional is invariant
    double ratio_deviation;   // worst numeric deviation of the t=1 ratios
};

// Determines lambda with phi(alpha_t(a)) = lambda^t phi(a) from the t = 1
// ratio over the coordinate lines supporting phi, asserting constancy and
// positivity. Throws StructuralError-style domain_error when the functional
// is not relatively invariant.
LambdaResult compute_lambda(const SpectralGroup& g, const std::vector<Rational>& phi);

// Largest |.|-residual of the group law alpha_{y+z} = alpha_y alpha_z over
// all grid pairs and lines; exact, so 0 when the law holds.
double group_law_residual(const SpectralGroup& g, const std::vector<Qc>& grid);

// Residual of the inverse law (alpha_z)^{-1} = alpha_{-z}.
double inverse_law_residual(const SpectralGroup& g, const std::vector<Qc>& grid);

// P-operator law: with lambda = 1 the operator is the spectral generator
// itself and ||P^{iz} Lambda(a) - lambda^{-z/2} Lambda(alpha_z(a))|| must
// vanish; returns the worst residual over lines and grid points.
double p_operator_residual(const SpectralGroup& g, const std::vector<Qc>& grid);

// P^{it} preserves the Gram inner product at real t: exact check that the
// form is block diagonal over distinct eigenvalue exponents.
bool p_unitary_on_gram(const SpectralGroup& g,
                       const std::vector<std::vector<Rational>>& gram);

// Rebuilds a spectral group from the exact values of alpha_i alone by
// recovering integer eigenvalue exponents; nullopt when some value is not an
// integer power of q.
std::optional<SpectralGroup> rebuild_from_value_at_i(const Rational& q,
                                                     const std::vector<Rational>& alpha_i_values,
                                                     int max_exponent);

// Worst deviation of two groups on the grid, exact (0 iff equal exponents).
double group_agreement_residual(const SpectralGroup& a, const SpectralGroup& b,
                                const std::vector<Qc>& grid);

// First line where the alpha_i values differ, if any.
std::optional<std::size_t> first_difference_at_i(const SpectralGroup& a,
                                                 const SpectralGroup& b);

// The default 8-point z grid: real, purely imaginary, the special points -i
// and -i/2, and one generic complex point.
std::vector<Qc> default_z_grid();
std::string grid_to_string(const std::vector<Qc>& grid);

}  // namespace aqg
