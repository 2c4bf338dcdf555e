#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "aqg/scalars.hpp"

namespace aqg {

// Exact scalar of the form sum_e r_e * q^e with rational coefficients r_e and
// exact complex-rational exponents e, for a fixed base 0 < q < 1. Terms are
// kept canonical: the integer part of Re(e) is folded into the rational
// coefficient, so Re(e) ∈ [0,1). Under that normal form two QExp values are
// equal as scalars iff their term lists coincide, which lets analytic
// identities be decided exactly: exponent bookkeeping never rounds, so
// identities that hold have residual exactly zero at every grid point.
//
// Pure rationals carry no base; the base is attached by the first genuine
// power term and must be consistent across operands.
class QExp {
public:
    QExp() = default;
    QExp(long n) { if (n != 0) terms_.emplace_back(Qc(0), Rational(n)); }
    QExp(const Rational& r) { if (!r.is_zero()) terms_.emplace_back(Qc(0), r); }

    // r * q^e
    static QExp term(const Rational& q, Rational r, Qc e) {
        QExp x;
        x.base_ = q;
        x.insert(std::move(e), std::move(r));
        return x;
    }
    static QExp power(const Rational& q, Qc e) { return term(q, Rational(1), std::move(e)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero());
    }
    Rational rational_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_rational()) throw std::logic_error("QExp: not a plain rational");
        return terms_[0].second;
    }

    QExp conj() const {
        QExp out;
        out.base_ = base_;
        for (const auto& [e, r] : terms_) out.insert(e.conj(), r);
        return out;
    }

    Cx eval() const {
        Cx acc(0.0, 0.0);
        for (const auto& [e, r] : terms_) {
            if (e.is_zero())
                acc += Cx(r.to_double(), 0.0);
            else
                acc += r.to_double() * q_power(*base_, e);
        }
        return acc;
    }
    double abs() const { return std::abs(eval()); }

    QExp operator-() const {
        QExp out;
        out.base_ = base_;
        out.terms_.reserve(terms_.size());
        for (const auto& [e, r] : terms_) out.terms_.emplace_back(e, -r);
        return out;
    }

    QExp& operator+=(const QExp& o);
    QExp& operator-=(const QExp& o) { return *this += -o; }
    QExp& operator*=(const QExp& o) { *this = *this * o; return *this; }

    friend QExp operator+(QExp a, const QExp& b) { return a += b; }
    friend QExp operator-(QExp a, const QExp& b) { return a -= b; }
    friend QExp operator*(const QExp& a, const QExp& b);
    friend bool operator==(const QExp& a, const QExp& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QExp& a, const QExp& b) { return !(a == b); }

    const std::vector<std::pair<Qc, Rational>>& terms() const { return terms_; }

private:
    void adopt_base(const std::optional<Rational>& other);
    void insert(Qc e, Rational r);

    std::optional<Rational> base_;
    // Sorted by exponent; no zero coefficients; Re(exponent) ∈ [0,1).
    std::vector<std::pair<Qc, Rational>> terms_;
};

}  // namespace aqg
