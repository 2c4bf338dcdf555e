#include "aqg/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace aqg {

namespace {

using nlohmann::json;

Rational rational_field(const json& v, const std::string& where) {
    try {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected rational as \"num/den\" string or integer");
}

// Coefficient rows carry exact complex rationals as integer pairs:
// [..., re_num, re_den, im_num, im_den].
Qc row_coeff(const json& row, std::size_t offset, const std::string& where) {
    if (row.size() != offset + 4)
        throw ParseError(where + ": expected " + std::to_string(offset) +
                         " indices plus re_num, re_den, im_num, im_den");
    long rn = row[offset].get<long>(), rd = row[offset + 1].get<long>();
    long in = row[offset + 2].get<long>(), id = row[offset + 3].get<long>();
    if (rd == 0 || id == 0) throw ParseError(where + ": zero denominator");
    return Qc(Rational(rn, rd), Rational(in, id));
}

std::size_t index_field(const json& v, std::size_t n, const std::string& where) {
    long i = v.get<long>();
    if (i < 0 || static_cast<std::size_t>(i) >= n)
        throw ParseError(where + ": basis index " + std::to_string(i) + " out of range 0.." +
                         std::to_string(n - 1));
    return static_cast<std::size_t>(i);
}

AlgebraSpec parse_finite(const json& j, const std::string& origin) {
    AlgebraSpec spec;
    if (!j.contains("dim")) throw ParseError(origin + ": missing field 'dim'");
    long dim = j["dim"].get<long>();
    if (dim < 1 || dim > 64) throw ParseError(origin + ": dim out of range");
    spec.dim = static_cast<std::size_t>(dim);

    if (j.contains("basis")) {
        for (const auto& b : j["basis"]) spec.basis_labels.push_back(b.get<std::string>());
        if (spec.basis_labels.size() != spec.dim)
            throw ParseError(origin + ": 'basis' length does not match dim");
    }

    spec.mult.assign(spec.dim, std::vector<Element>(spec.dim));
    if (!j.contains("mult")) throw ParseError(origin + ": missing field 'mult'");
    std::size_t rowno = 0;
    for (const auto& row : j["mult"]) {
        std::string where = origin + ": mult row " + std::to_string(rowno++);
        if (!row.is_array() || row.size() != 7)
            throw ParseError(where + ": expected [i, j, k, re_num, re_den, im_num, im_den]");
        std::size_t i = index_field(row[0], spec.dim, where);
        std::size_t jj = index_field(row[1], spec.dim, where);
        std::size_t k = index_field(row[2], spec.dim, where);
        spec.mult[i][jj].add(k, row_coeff(row, 3, where));
    }

    if (!j.contains("star")) throw ParseError(origin + ": missing field 'star'");
    spec.star.assign(spec.dim, Element());
    rowno = 0;
    for (const auto& row : j["star"]) {
        std::string where = origin + ": star row " + std::to_string(rowno++);
        if (!row.is_array() || row.size() != 6)
            throw ParseError(where + ": expected [i, k, re_num, re_den, im_num, im_den]");
        std::size_t i = index_field(row[0], spec.dim, where);
        std::size_t k = index_field(row[1], spec.dim, where);
        spec.star[i].add(k, row_coeff(row, 2, where));
    }

    if (!j.contains("unit")) throw ParseError(origin + ": missing field 'unit'");
    {
        const auto& u = j["unit"];
        if (!u.is_array() || u.size() != spec.dim)
            throw ParseError(origin + ": 'unit' must list one rational per basis element");
        for (std::size_t i = 0; i < spec.dim; ++i)
            spec.unit.add(i, Qc(rational_field(u[i], origin + ": unit[" + std::to_string(i) + "]")));
    }

    if (!j.contains("comult")) throw ParseError(origin + ": missing field 'comult'");
    spec.comult.assign(spec.dim, Tensor2(spec.dim * spec.dim));
    rowno = 0;
    for (const auto& row : j["comult"]) {
        std::string where = origin + ": comult row " + std::to_string(rowno++);
        if (!row.is_array() || row.size() != 7)
            throw ParseError(where + ": expected [i, j, k, re_num, re_den, im_num, im_den]");
        std::size_t i = index_field(row[0], spec.dim, where);
        std::size_t jj = index_field(row[1], spec.dim, where);
        std::size_t k = index_field(row[2], spec.dim, where);
        spec.comult[i][jj * spec.dim + k] += row_coeff(row, 3, where);
    }
    return spec;
}

}  // namespace

Instance parse_instance_text(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!j.contains("kind")) throw ParseError(origin + ": missing field 'kind'");
    std::string kind = j["kind"].get<std::string>();

    Instance inst;
    inst.name = j.contains("name") ? j["name"].get<std::string>() : origin;

    if (kind == "finite") {
        inst.kind = Instance::Kind::Finite;
        inst.finite = parse_finite(j, origin);
    } else if (kind == "suq2") {
        inst.kind = Instance::Kind::Suq2;
        Suq2Config cfg;
        if (j.contains("q")) cfg.q = rational_field(j["q"], origin + ": q");
        if (!(cfg.q > Rational(0) && cfg.q < Rational(1)))
            throw ParseError(origin + ": q must lie strictly between 0 and 1");
        if (j.contains("degree_cap")) cfg.degree_cap = j["degree_cap"].get<int>();
        if (cfg.degree_cap < 1 || cfg.degree_cap > 10)
            throw ParseError(origin + ": degree_cap out of range 1..10");
        if (j.contains("fault")) {
            const auto& f = j["fault"];
            std::string fk = f.contains("kind") ? f["kind"].get<std::string>() : "";
            if (fk == "haar_perturbation") {
                cfg.haar_perturbation =
                    rational_field(f["amount"], origin + ": fault.amount");
            } else if (fk == "f_sign_flip") {
                cfg.f_sign_flip = true;
            } else {
                throw ParseError(origin + ": unknown fault kind '" + fk + "'");
            }
        }
        inst.suq2 = cfg;
    } else {
        throw ParseError(origin + ": unknown kind '" + kind + "' (expected finite or suq2)");
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance_text(ss.str(), path);
}

}  // namespace aqg
