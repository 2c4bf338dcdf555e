#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace aqg {

using Cx = std::complex<double>;

// Exact rational scalar. Always kept in canonical form (gcd 1, positive
// denominator); that is gmp's invariant and we never construct around it.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "num/den" or "num". Whitespace is not accepted.
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return v_; }
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Integral power, negative exponents allowed for nonzero base.
    Rational pow(long e) const;

    Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    mpq_class v_;
};

// Complex number with exact rational real and imaginary parts. This is the
// scalar field of the finite engine and of all exponent bookkeeping; it only
// degrades to double at reporting or eigenvalue time.
class Qc {
public:
    Rational re, im;

    Qc() = default;
    Qc(Rational r) : re(std::move(r)) {}
    Qc(long r) : re(r) {}
    Qc(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Qc i() { return Qc(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    Qc conj() const { return Qc(re, -im); }
    Cx to_cx() const { return Cx(re.to_double(), im.to_double()); }
    std::string str() const;

    Qc operator-() const { return Qc(-re, -im); }
    Qc& operator+=(const Qc& o) { re += o.re; im += o.im; return *this; }
    Qc& operator-=(const Qc& o) { re -= o.re; im -= o.im; return *this; }
    Qc& operator*=(const Qc& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Qc& operator/=(const Qc& o) {
        Rational n = o.re * o.re + o.im * o.im;
        if (n.is_zero()) throw std::domain_error("Qc: division by zero");
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }

    friend Qc operator+(Qc a, const Qc& b) { return a += b; }
    friend Qc operator-(Qc a, const Qc& b) { return a -= b; }
    friend Qc operator*(Qc a, const Qc& b) { return a *= b; }
    friend Qc operator/(Qc a, const Qc& b) { return a /= b; }
    friend bool operator==(const Qc& a, const Qc& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Qc& a, const Qc& b) { return !(a == b); }

    // Lexicographic order, used only as a container key.
    friend bool operator<(const Qc& a, const Qc& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

struct ToleranceCfg {
    double abs_tol = 1e-9;
    // Minimum eigenvalue still accepted as positive semidefinite.
    double psd_floor = -1e-10;
};

// q^z = exp(z ln q) for 0 < q < 1; ln q is real so the principal power is
// unambiguous. Rejects bases outside (0,1).
Cx q_power(const Rational& q, const Cx& z);
Cx q_power(const Rational& q, const Qc& z);

bool approx_eq(const Cx& x, const Cx& y, const ToleranceCfg& cfg = {});

}  // namespace aqg
