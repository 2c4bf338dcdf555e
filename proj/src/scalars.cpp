#include "aqg/scalars.hpp"

#include <cmath>

namespace aqg {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class v(text, 10);
            v.canonicalize();
            return Rational(v);
        }
        mpz_class num(text.substr(0, slash), 10);
        mpz_class den(text.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("zero denominator");
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(v);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: bad rational '" + text + "'");
    }
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational::pow: 0 to negative power");
        return Rational(0);
    }
    mpq_class base = e < 0 ? mpq_class(1 / v_) : v_;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), n);
    return Rational(mpq_class(num, den));
}

std::string Qc::str() const {
    if (im.is_zero()) return re.str();
    return re.str() + (im.sign() < 0 ? "-" : "+") + im.abs().str() + "i";
}

Cx q_power(const Rational& q, const Cx& z) {
    if (!(q > Rational(0) && q < Rational(1)))
        throw std::domain_error("q_power: base must lie in (0,1)");
    double lq = std::log(q.to_double());
    // exp((x+iy) lq) = q^x (cos(y lq) + i sin(y lq))
    double mag = std::exp(z.real() * lq);
    double arg = z.imag() * lq;
    return Cx(mag * std::cos(arg), mag * std::sin(arg));
}

Cx q_power(const Rational& q, const Qc& z) {
    return q_power(q, z.to_cx());
}

bool approx_eq(const Cx& x, const Cx& y, const ToleranceCfg& cfg) {
    return std::abs(x - y) <= cfg.abs_tol;
}

}  // namespace aqg
