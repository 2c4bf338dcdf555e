#include "aqg/suq2.hpp"

#include <sstream>
#include <stdexcept>

namespace aqg::suq2 {

std::string PbwTerm::str() const {
    if (k == 0 && l == 0 && m == 0) return "1";
    std::ostringstream o;
    if (k > 0) {
        o << "a";
        if (k > 1) o << "^" << k;
    } else if (k < 0) {
        o << "a*";
        if (k < -1) o << "^" << -k;
    }
    if (l > 0) {
        if (o.tellp() > 0) o << " ";
        o << "c";
        if (l > 1) o << "^" << l;
    }
    if (m > 0) {
        if (o.tellp() > 0) o << " ";
        o << "c*";
        if (m > 1) o << "^" << m;
    }
    return o.str();
}

std::string scalar_str(const Rational& r) { return r.str(); }

std::string scalar_str(const QExp& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [e, r] : x.terms()) {
        if (!s.empty()) s += "+";
        if (e.is_zero()) {
            s += r.str();
        } else {
            s += r.str() + "*q^(" + e.str() + ")";
        }
    }
    return s;
}

std::string scalar_str(const Cx& x) {
    std::ostringstream o;
    o << x.real();
    if (x.imag() >= 0) o << "+";
    o << x.imag() << "i";
    return o.str();
}

Engine::Engine(Rational q, int degree_cap) : q_(std::move(q)), degree_cap_(degree_cap) {
    if (!(q_ > Rational(0) && q_ < Rational(1)))
        throw std::domain_error("suq2: q must lie in (0,1)");
    if (degree_cap_ < 1) throw std::domain_error("suq2: degree cap must be positive");
}

// Right multiplication of a normal monomial by one generator. The relations
// used: ca = q^{-1} ac, c*a = q^{-1} ac*, ca* = q a*c, c*a* = q a*c*,
// a*a = 1 - cc*, aa* = 1 - q^2 cc*, cc* = c*c.
NcPoly<Rational> Engine::mul_by_gen(const NcPoly<Rational>& x, Gen g) const {
    NcPoly<Rational> out;
    for (const auto& [t, c] : x.terms()) {
        switch (g) {
            case Gen::C:
                out.add({t.k, t.l + 1, t.m}, c);
                break;
            case Gen::Cs:
                out.add({t.k, t.l, t.m + 1}, c);
                break;
            case Gen::A: {
                Rational f = c * q_.pow(-(t.l + t.m));
                if (t.k >= 0) {
                    out.add({t.k + 1, t.l, t.m}, f);
                } else {
                    out.add({t.k + 1, t.l, t.m}, f);
                    out.add({t.k + 1, t.l + 1, t.m + 1}, -f);
                }
                break;
            }
            case Gen::As: {
                Rational f = c * q_.pow(t.l + t.m);
                if (t.k <= 0) {
                    out.add({t.k - 1, t.l, t.m}, f);
                } else {
                    out.add({t.k - 1, t.l, t.m}, f);
                    out.add({t.k - 1, t.l + 1, t.m + 1}, -f * q_ * q_);
                }
                break;
            }
        }
    }
    return out;
}

NcPoly<Rational> Engine::normal_form(const std::vector<Gen>& word) const {
    NcPoly<Rational> acc = NcPoly<Rational>::one();
    for (Gen g : word) acc = mul_by_gen(acc, g);
    return acc;
}

NcPoly<Rational> Engine::mono_mul(const PbwTerm& x, const PbwTerm& y) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = mul_cache_.find({x, y});
        if (it != mul_cache_.end()) return it->second;
    }
    NcPoly<Rational> acc = NcPoly<Rational>::monomial(x);
    Gen ag = y.k >= 0 ? Gen::A : Gen::As;
    for (int i = 0; i < std::abs(y.k); ++i) acc = mul_by_gen(acc, ag);
    for (int i = 0; i < y.l; ++i) acc = mul_by_gen(acc, Gen::C);
    for (int i = 0; i < y.m; ++i) acc = mul_by_gen(acc, Gen::Cs);
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        mul_cache_.emplace(std::make_pair(x, y), acc);
    }
    return acc;
}

TensorPoly<Rational> Engine::comult_mono(const PbwTerm& t) const {
    if (t.degree() > degree_cap_)
        throw std::domain_error("suq2: comultiplication degree cap exceeded at " + t.str() +
                                " (cap " + std::to_string(degree_cap_) + ")");
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = comult_cache_.find(t);
        if (it != comult_cache_.end()) return it->second;
    }
    TensorPoly<Rational> out;
    if (t.k == 0 && t.l == 0 && t.m == 0) {
        out.add({PbwTerm{}, PbwTerm{}}, Rational(1));
    } else {
        // Peel the last letter of a^k c^l c*^m and multiply by Delta(letter).
        PbwTerm prefix = t;
        Gen last;
        if (t.m > 0) {
            prefix.m -= 1;
            last = Gen::Cs;
        } else if (t.l > 0) {
            prefix.l -= 1;
            last = Gen::C;
        } else if (t.k > 0) {
            prefix.k -= 1;
            last = Gen::A;
        } else {
            prefix.k += 1;
            last = Gen::As;
        }
        TensorPoly<Rational> base = comult_mono(prefix);
        // Delta on generators: the standard matrix corepresentation.
        std::vector<std::tuple<PbwTerm, PbwTerm, Rational>> dg;
        switch (last) {
            case Gen::A:
                dg = {{{1, 0, 0}, {1, 0, 0}, Rational(1)},
                      {{0, 0, 1}, {0, 1, 0}, -q_}};
                break;
            case Gen::As:
                dg = {{{-1, 0, 0}, {-1, 0, 0}, Rational(1)},
                      {{0, 1, 0}, {0, 0, 1}, -q_}};
                break;
            case Gen::C:
                dg = {{{0, 1, 0}, {1, 0, 0}, Rational(1)},
                      {{-1, 0, 0}, {0, 1, 0}, Rational(1)}};
                break;
            case Gen::Cs:
                dg = {{{0, 0, 1}, {-1, 0, 0}, Rational(1)},
                      {{1, 0, 0}, {0, 0, 1}, Rational(1)}};
                break;
        }
        for (const auto& [key, c] : base.terms()) {
            for (const auto& [gl, gr, gc] : dg) {
                Rational f = c * gc;
                NcPoly<Rational> left = mono_mul(key.first, gl);
                NcPoly<Rational> right = mono_mul(key.second, gr);
                for (const auto& [tl, cl] : left.terms())
                    for (const auto& [tr, cr] : right.terms())
                        out.add({tl, tr}, f * cl * cr);
            }
        }
    }
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        comult_cache_.emplace(t, out);
    }
    return out;
}

Rational Engine::haar_mono(const PbwTerm& t) const {
    if (t.k != 0 || t.l != t.m) return Rational(0);
    // h((cc*)^l) = (1 - q^2) / (1 - q^{2l+2})
    Rational q2 = q_ * q_;
    Rational val = (Rational(1) - q2) / (Rational(1) - q2.pow(t.l + 1));
    if (t.l == 1 && !haar_perturb_.is_zero()) val += haar_perturb_;
    return val;
}

TermImage<Rational> Engine::antipode_mono(const PbwTerm& t) const {
    // S(a^k c^l c*^m) = (-1)^{l+m} q^{l-m+k(l+m)} a^{-k} c^l c*^m
    Rational f = q_.pow(t.l - t.m + t.k * (t.l + t.m));
    if ((t.l + t.m) % 2 != 0) f = -f;
    return {{-t.k, t.l, t.m}, f};
}

TermImage<Rational> Engine::s_squared_mono(const PbwTerm& t) const {
    return {t, q_.pow(2 * (t.l - t.m))};
}

TermImage<Rational> Engine::r_mono(const PbwTerm& t) const {
    Rational f = q_.pow(t.k * (t.l + t.m));
    if ((t.l + t.m) % 2 != 0) f = -f;
    return {{-t.k, t.l, t.m}, f};
}

TermImage<Rational> Engine::star_mono_shape(const PbwTerm& t, const Rational& q) {
    return {{-t.k, t.m, t.l}, q.pow(t.k * (t.l + t.m))};
}

NcPoly<QExp> Engine::contract_left(const Character& th, const NcPoly<QExp>& x) const {
    NcPoly<QExp> out;
    for (const auto& [t, c] : x.terms()) {
        for (const auto& [key, r] : comult_mono(t)) {
            QExp v = th.value_on(key.first);
            if (v.is_zero()) continue;
            out.add(key.second, c * v * QExp(r));
        }
    }
    return out;
}

NcPoly<QExp> Engine::contract_right(const Character& th, const NcPoly<QExp>& x) const {
    NcPoly<QExp> out;
    for (const auto& [t, c] : x.terms()) {
        for (const auto& [key, r] : comult_mono(t)) {
            QExp v = th.value_on(key.second);
            if (v.is_zero()) continue;
            out.add(key.first, c * v * QExp(r));
        }
    }
    return out;
}

NcPoly<QExp> Engine::sandwich(const Character& th1, const Character& th2,
                              const NcPoly<QExp>& x) const {
    // (th1 ⊗ id ⊗ th2)(Delta ⊗ id)Delta(x)
    NcPoly<QExp> out;
    for (const auto& [t, c] : x.terms()) {
        for (const auto& [key, r] : comult_mono(t)) {
            QExp v2 = th2.value_on(key.second);
            if (v2.is_zero()) continue;
            for (const auto& [ikey, ir] : comult_mono(key.first)) {
                QExp v1 = th1.value_on(ikey.first);
                if (v1.is_zero()) continue;
                out.add(ikey.second, c * v1 * v2 * QExp(r * ir));
            }
        }
    }
    return out;
}

std::vector<PbwTerm> Engine::monomials_up_to(int cap) {
    std::vector<PbwTerm> out;
    for (int d = 0; d <= cap; ++d)
        for (int k = -d; k <= d; ++k)
            for (int l = 0; l + std::abs(k) <= d; ++l) {
                int m = d - std::abs(k) - l;
                out.push_back({k, l, m});
            }
    return out;
}

std::vector<std::vector<Rational>> Engine::gram(int cap) const {
    auto mons = monomials_up_to(cap);
    std::size_t n = mons.size();
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
        auto sj = star_mono_shape(mons[j], q_);
        for (std::size_t i = 0; i < n; ++i) {
            NcPoly<Rational> prod = mono_mul(sj.term, mons[i]);
            Rational acc;
            for (const auto& [t, c] : prod.terms()) {
                Rational h = haar_mono(t);
                if (!h.is_zero()) acc += c * h;
            }
            g[i][j] = acc * sj.factor;
        }
    }
    return g;
}

std::vector<std::vector<Rational>> Engine::gram_hr(int cap) const {
    auto mons = monomials_up_to(cap);
    std::size_t n = mons.size();
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
        auto sj = star_mono_shape(mons[j], q_);
        for (std::size_t i = 0; i < n; ++i) {
            NcPoly<Rational> prod = mono_mul(sj.term, mons[i]);
            Rational acc;
            for (const auto& [t, c] : prod.terms()) {
                auto rt = r_mono(t);
                Rational h = haar_mono(rt.term);
                if (!h.is_zero()) acc += c * rt.factor * h;
            }
            g[i][j] = acc * sj.factor;
        }
    }
    return g;
}

}  // namespace aqg::suq2
