#pragma once

#include <optional>
#include <string>

#include "aqg/finite.hpp"
#include "aqg/scalars.hpp"

namespace aqg {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Suq2Config {
    Rational q = Rational(1, 2);
    int degree_cap = 6;
    Rational haar_perturbation = Rational(0);  // injected fault, normally 0
    bool f_sign_flip = false;                  // injected fault
};

struct Instance {
    enum class Kind { Finite, Suq2 };
    Kind kind = Kind::Finite;
    std::string name;
    std::optional<AlgebraSpec> finite;
    std::optional<Suq2Config> suq2;
};

// Parses and, for the finite kind, shape-checks an instance file. Structural
// axiom validation is the hopf suite's job; malformed tables (bad indices,
// bad rationals, missing fields) throw ParseError here.
Instance load_instance(const std::string& path);
Instance parse_instance_text(const std::string& text, const std::string& origin);

}  // namespace aqg
