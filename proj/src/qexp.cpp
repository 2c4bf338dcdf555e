#include "aqg/qexp.hpp"

#include <algorithm>
#include <stdexcept>

namespace aqg {

namespace {

// Splits a rational x as n + f with n integer and f in [0,1).
long rational_floor(const Rational& x) {
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), x.raw().get_num().get_mpz_t(), x.raw().get_den().get_mpz_t());
    if (!n.fits_slong_p()) throw std::overflow_error("QExp: exponent out of range");
    return n.get_si();
}

}  // namespace

void QExp::adopt_base(const std::optional<Rational>& other) {
    if (!other) return;
    if (!base_) {
        base_ = other;
        return;
    }
    if (!(*base_ == *other)) throw std::logic_error("QExp: mixed bases");
}

void QExp::insert(Qc e, Rational r) {
    if (r.is_zero()) return;
    long n = rational_floor(e.re);
    if (n != 0) {
        if (!base_) throw std::logic_error("QExp: power term without a base");
        r *= base_->pow(n);
        e.re -= Rational(n);
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const auto& t, const Qc& key) { return t.first < key; });
    if (it != terms_.end() && it->first == e) {
        it->second += r;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {std::move(e), std::move(r)});
    }
}

QExp& QExp::operator+=(const QExp& o) {
    if (o.terms_.empty()) return *this;
    adopt_base(o.base_);
    for (const auto& [e, r] : o.terms_) insert(e, r);
    return *this;
}

QExp operator*(const QExp& a, const QExp& b) {
    QExp out;
    out.adopt_base(a.base_);
    out.adopt_base(b.base_);
    for (const auto& [ea, ra] : a.terms_)
        for (const auto& [eb, rb] : b.terms_) out.insert(ea + eb, ra * rb);
    return out;
}

}  // namespace aqg
