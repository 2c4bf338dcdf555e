#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "aqg/qexp.hpp"
#include "aqg/scalars.hpp"

namespace aqg::suq2 {

enum class Gen { A, As, C, Cs };

// PBW monomial a^k c^l c*^m; negative k means (a*)^{-k}.
struct PbwTerm {
    int k = 0;
    int l = 0;
    int m = 0;

    int degree() const { return (k < 0 ? -k : k) + l + m; }
    // charge under the Z^2 grading (a-grade, c-grade); the analytic maps act
    // by q-powers of these
    int a_grade() const { return k; }
    int c_grade() const { return l - m; }

    friend bool operator<(const PbwTerm& x, const PbwTerm& y) {
        if (x.k != y.k) return x.k < y.k;
        if (x.l != y.l) return x.l < y.l;
        return x.m < y.m;
    }
    friend bool operator==(const PbwTerm& x, const PbwTerm& y) {
        return x.k == y.k && x.l == y.l && x.m == y.m;
    }
    std::string str() const;
};

// Scalar-ring glue so the same polynomial code runs in exact rational mode,
// exact q^exponent mode, and plain double mode.
inline Rational conj_scalar(const Rational& r) { return r; }
inline QExp conj_scalar(const QExp& x) { return x.conj(); }
inline Cx conj_scalar(const Cx& x) { return std::conj(x); }
inline bool scalar_is_zero(const Rational& r) { return r.is_zero(); }
inline bool scalar_is_zero(const QExp& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Cx& x) { return x == Cx(0, 0); }
template <typename K>
K scalar_from_rational(const Rational& r);
template <>
inline Rational scalar_from_rational<Rational>(const Rational& r) { return r; }
template <>
inline QExp scalar_from_rational<QExp>(const Rational& r) { return QExp(r); }
template <>
inline Cx scalar_from_rational<Cx>(const Rational& r) { return Cx(r.to_double(), 0); }
inline double scalar_abs(const Rational& r, const Rational&) {
    return std::abs(r.to_double());
}
inline double scalar_abs(const QExp& x, const Rational&) { return x.abs(); }
inline double scalar_abs(const Cx& x, const Rational&) { return std::abs(x); }
std::string scalar_str(const Rational& r);
std::string scalar_str(const QExp& x);
std::string scalar_str(const Cx& x);

template <typename K>
class NcPoly {
public:
    NcPoly() = default;
    static NcPoly monomial(PbwTerm t, K c = scalar_from_rational<K>(Rational(1))) {
        NcPoly p;
        p.add(t, c);
        return p;
    }
    static NcPoly one() { return monomial(PbwTerm{}); }

    void add(const PbwTerm& t, const K& c) {
        if (scalar_is_zero(c)) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
        } else {
            it->second += c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    const std::map<PbwTerm, K>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    bool is_zero() const { return terms_.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& [t, c] : terms_) d = std::max(d, t.degree());
        return d;
    }

    NcPoly& operator+=(const NcPoly& o) {
        for (const auto& [t, c] : o.terms_) add(t, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        for (const auto& [t, c] : o.terms_) add(t, static_cast<K>(-c));
        return *this;
    }
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

    NcPoly scaled(const K& s) const {
        NcPoly out;
        for (const auto& [t, c] : terms_) out.add(t, static_cast<K>(c * s));
        return out;
    }

    double max_abs(const Rational& q) const {
        double m = 0.0;
        for (const auto& [t, c] : terms_) m = std::max(m, scalar_abs(c, q));
        return m;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [t, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += scalar_str(c) + "*" + t.str();
        }
        return s;
    }

private:
    std::map<PbwTerm, K> terms_;
};

template <typename K>
class TensorPoly {
public:
    using Key = std::pair<PbwTerm, PbwTerm>;

    void add(const Key& t, const K& c) {
        if (scalar_is_zero(c)) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
        } else {
            it->second += c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }
    const std::map<Key, K>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    bool is_zero() const { return terms_.empty(); }

    TensorPoly& operator+=(const TensorPoly& o) {
        for (const auto& [t, c] : o.terms_) add(t, c);
        return *this;
    }
    TensorPoly& operator-=(const TensorPoly& o) {
        for (const auto& [t, c] : o.terms_) add(t, static_cast<K>(-c));
        return *this;
    }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
        return a.terms_ == b.terms_;
    }

    TensorPoly flip() const {
        TensorPoly out;
        for (const auto& [t, c] : terms_) out.add({t.second, t.first}, c);
        return out;
    }

    double max_abs(const Rational& q) const {
        double m = 0.0;
        for (const auto& [t, c] : terms_) m = std::max(m, scalar_abs(c, q));
        return m;
    }

private:
    std::map<Key, K> terms_;
};

// A monomial-to-monomial map: target term plus an exact scalar factor.
template <typename K>
struct TermImage {
    PbwTerm term;
    K factor;
};

// Multiplicative character determined by its value q^{a_exponent} on the
// generator a (value 0 on c and c*). Realizes Woronowicz's f_z and the dual
// modular characters eps sigma_{-z}.
struct Character {
    Qc a_exponent;  // value on a is q^{a_exponent}, on a* is q^{-a_exponent}
    Rational q;

    QExp value_on(const PbwTerm& t) const {
        if (t.l != 0 || t.m != 0) return QExp();
        Rational k(t.k);
        return QExp::power(q, Qc(a_exponent.re * k, a_exponent.im * k));
    }

    // Nonzero only on terms with l = m = 0; the value on a^k is q^{k e}.
    QExp eval(const NcPoly<QExp>& x) const {
        QExp acc;
        for (const auto& [t, c] : x.terms()) {
            QExp v = value_on(t);
            if (!v.is_zero()) acc += c * v;
        }
        return acc;
    }
};

// Pol(SU_q(2)) as a terminating rewriting system on PBW monomials, with the
// defining relations ac = qca, ac* = qc*a, cc* = c*c, a*a = 1 - c*c,
// aa* = 1 - q^2 cc*. Comultiplication on generators is the standard matrix
// corepresentation Delta(a) = a ⊗ a - q c* ⊗ c, Delta(c) = c ⊗ a + a* ⊗ c.
class Engine {
public:
    explicit Engine(Rational q, int degree_cap = 6);

    const Rational& q() const { return q_; }
    int degree_cap() const { return degree_cap_; }

    // Injectable faults for sensitivity fixtures.
    void perturb_haar_cc(const Rational& amount) { haar_perturb_ = amount; }
    void flip_f_sign() { f_sign_flipped_ = true; }
    bool f_sign_flipped() const { return f_sign_flipped_; }

    // Exact rational core. The memoized entries are returned by value so the
    // caches stay safe under concurrent suite workers.
    NcPoly<Rational> normal_form(const std::vector<Gen>& word) const;
    NcPoly<Rational> mono_mul(const PbwTerm& x, const PbwTerm& y) const;
    TensorPoly<Rational> comult_mono(const PbwTerm& t) const;
    Rational haar_mono(const PbwTerm& t) const;
    TermImage<Rational> antipode_mono(const PbwTerm& t) const;
    TermImage<Rational> s_squared_mono(const PbwTerm& t) const;
    TermImage<Rational> r_mono(const PbwTerm& t) const;  // R = S tau_{i/2}
    static TermImage<Rational> star_mono_shape(const PbwTerm& t, const Rational& q);

    // K-generic layer ------------------------------------------------------
    template <typename K>
    NcPoly<K> multiply(const NcPoly<K>& x, const NcPoly<K>& y) const {
        NcPoly<K> out;
        for (const auto& [tx, cx] : x.terms())
            for (const auto& [ty, cy] : y.terms()) {
                K f = static_cast<K>(cx * cy);
                for (const auto& [t, r] : mono_mul(tx, ty))
                    out.add(t, static_cast<K>(f * scalar_from_rational<K>(r)));
            }
        return out;
    }

    template <typename K>
    NcPoly<K> star(const NcPoly<K>& x) const {
        NcPoly<K> out;
        for (const auto& [t, c] : x.terms()) {
            auto im = star_mono_shape(t, q_);
            out.add(im.term,
                    static_cast<K>(conj_scalar(c) * scalar_from_rational<K>(im.factor)));
        }
        return out;
    }

    template <typename K>
    TensorPoly<K> comultiply(const NcPoly<K>& x) const {
        TensorPoly<K> out;
        for (const auto& [t, c] : x.terms()) {
            for (const auto& [key, r] : comult_mono(t))
                out.add(key, static_cast<K>(c * scalar_from_rational<K>(r)));
        }
        return out;
    }

    template <typename K>
    K counit(const NcPoly<K>& x) const {
        K acc = scalar_from_rational<K>(Rational(0));
        for (const auto& [t, c] : x.terms())
            if (t.l == 0 && t.m == 0) acc += c;
        return acc;
    }

    template <typename K>
    NcPoly<K> apply_term_map(const NcPoly<K>& x,
                             TermImage<Rational> (Engine::*map)(const PbwTerm&) const) const {
        NcPoly<K> out;
        for (const auto& [t, c] : x.terms()) {
            auto im = (this->*map)(t);
            out.add(im.term, static_cast<K>(c * scalar_from_rational<K>(im.factor)));
        }
        return out;
    }

    template <typename K>
    NcPoly<K> antipode(const NcPoly<K>& x) const {
        // S is antimultiplicative but maps monomials to monomials, so a
        // termwise map is enough.
        return apply_term_map(x, &Engine::antipode_mono);
    }
    template <typename K>
    NcPoly<K> s_squared(const NcPoly<K>& x) const {
        return apply_term_map(x, &Engine::s_squared_mono);
    }
    template <typename K>
    NcPoly<K> r_map(const NcPoly<K>& x) const {
        return apply_term_map(x, &Engine::r_mono);
    }

    template <typename K>
    K haar(const NcPoly<K>& x) const {
        K acc = scalar_from_rational<K>(Rational(0));
        for (const auto& [t, c] : x.terms()) {
            Rational h = haar_mono(t);
            if (!h.is_zero()) acc += static_cast<K>(c * scalar_from_rational<K>(h));
        }
        return acc;
    }
    // psi = h S; equals h here but is kept as its own evaluation route.
    template <typename K>
    K haar_psi(const NcPoly<K>& x) const {
        return haar(antipode(x));
    }

    // Analytic one-parameter maps; all act diagonally with eigenvalue
    // q^{w * iz} where w is an integer exponent of the monomial.
    enum class Flow { Sigma, SigmaPrime, Tau };
    static int flow_exponent(Flow f, const PbwTerm& t) {
        switch (f) {
            case Flow::Sigma: return -2 * t.a_grade();
            case Flow::SigmaPrime: return -2 * t.a_grade();  // delta = 1 here
            case Flow::Tau: return 2 * t.c_grade();
        }
        return 0;
    }

    // Exact scale factor q^{w iz} as a QExp.
    QExp flow_scale(Flow f, const PbwTerm& t, const Qc& z) const {
        Rational w(flow_exponent(f, t));
        Qc iz(-z.im, z.re);
        return QExp::power(q_, Qc(w * iz.re, w * iz.im));
    }

    NcPoly<QExp> flow_apply(Flow f, const Qc& z, const NcPoly<QExp>& x) const {
        NcPoly<QExp> out;
        for (const auto& [t, c] : x.terms()) out.add(t, c * flow_scale(f, t, z));
        return out;
    }

    // sigma'_z through the other route R sigma_{-z} R, for cross checks.
    NcPoly<QExp> sigma_prime_via_r(const Qc& z, const NcPoly<QExp>& x) const {
        return r_map(flow_apply(Flow::Sigma, Qc(-z.re, -z.im), r_map(x)));
    }

    // Woronowicz characters with the computationally resolved sign:
    // f_z(a) = q^{s z} where s = f_sign(). A flipped sign is injectable as a
    // fault.
    int f_sign() const { return f_sign_flipped_ ? +1 : -1; }
    Character f_character(const Qc& z) const {
        return Character{Qc(Rational(f_sign()) * z.re, Rational(f_sign()) * z.im), q_};
    }
    // delta_hat^{iz} = eps sigma_{-z}; value on a is q^{2iz}.
    Character delta_hat_character(const Qc& z) const {
        Qc iz(-z.im, z.re);
        return Character{Qc(iz.re * Rational(2), iz.im * Rational(2)), q_};
    }

    // (theta ⊗ id)Delta(x) and (id ⊗ theta)Delta(x) for a character theta.
    NcPoly<QExp> contract_left(const Character& th, const NcPoly<QExp>& x) const;
    NcPoly<QExp> contract_right(const Character& th, const NcPoly<QExp>& x) const;

    // (th1 ⊗ id ⊗ th2)Delta2(x), the two-sided character sandwich.
    NcPoly<QExp> sandwich(const Character& th1, const Character& th2,
                          const NcPoly<QExp>& x) const;

    // All PBW monomials of degree <= cap, in a fixed deterministic order.
    static std::vector<PbwTerm> monomials_up_to(int cap);

    // Degree-graded subspace data for the one-parameter machinery: the exact
    // Gram matrix h(y* x) over monomials_up_to(cap).
    std::vector<std::vector<Rational>> gram(int cap) const;
    // Gram of the rotated functional h R, for its positivity certificate.
    std::vector<std::vector<Rational>> gram_hr(int cap) const;

private:
    NcPoly<Rational> mul_by_gen(const NcPoly<Rational>& x, Gen g) const;

    Rational q_;
    int degree_cap_;
    Rational haar_perturb_ = Rational(0);
    bool f_sign_flipped_ = false;

    mutable std::mutex cache_mu_;
    mutable std::map<std::pair<PbwTerm, PbwTerm>, NcPoly<Rational>> mul_cache_;
    mutable std::map<PbwTerm, TensorPoly<Rational>> comult_cache_;
};

}  // namespace aqg::suq2
