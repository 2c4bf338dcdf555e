// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqg/duality.hpp"
#include "aqg/instance.hpp"
#include "aqg/suites.hpp"

using namespace aqg;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : ("  [" + detail + "]").c_str());
    if (!ok) ++failures;
}

std::string inst_path(const std::string& name) {
    return std::string(AQG_INSTANCE_DIR) + "/" + name;
}

const std::vector<std::string>& finite_instances() {
    static const std::vector<std::string> v = {"c_z2.json", "f_z2.json", "c_s3.json",
                                               "f_s3.json", "kac_paljutkin.json"};
    return v;
}

const CheckEntry* find_entry(const Report& rep, const std::string& id) {
    for (const auto& e : rep.entries)
        if (e.id == id) return &e;
    return nullptr;
}

bool informational(const CheckEntry& e) {
    return e.id.find("min_eig") != std::string::npos ||
           e.id.find("f_sign_resolved") != std::string::npos ||
           e.id.find("self_dual_fingerprint") != std::string::npos;
}

bool all_exact(const Report& rep, std::string* why) {
    for (const auto& e : rep.entries) {
        if (informational(e)) continue;
        if (!e.pass || e.residual != 0.0) {
            *why = e.id + " residual " + format_double(e.residual);
            return false;
        }
    }
    return true;
}

bool all_within(const Report& rep, double tol, std::string* why) {
    for (const auto& e : rep.entries) {
        if (informational(e)) continue;
        if (!e.pass || !(e.residual < tol)) {
            *why = e.id + " residual " + format_double(e.residual);
            return false;
        }
    }
    return true;
}

struct CliResult {
    int exit_code = -1;
    std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(AQG_VERIFY_BIN) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        r.stdout_text.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Independent Haar value for the compact instance: solve the invariance
// system restricted to degree <= 2 and return h(c c*).
Qc haar_cc_by_invariance(const suq2::Engine& eng) {
    using suq2::Engine;
    using suq2::PbwTerm;
    auto mons = Engine::monomials_up_to(2);
    std::size_t n = mons.size();
    auto index_of = [&](const PbwTerm& t) {
        for (std::size_t i = 0; i < n; ++i)
            if (mons[i] == t) return i;
        throw std::logic_error("oracle: unexpected leg");
    };
    std::vector<std::vector<Qc>> rows;
    std::vector<Qc> rhs;
    for (const auto& x : mons) {
        std::map<PbwTerm, std::vector<Qc>> per_left;
        for (const auto& [key, c] : eng.comult_mono(x)) {
            auto& row = per_left[key.first];
            row.resize(n);
            row[index_of(key.second)] += Qc(c);
        }
        for (auto& [u, row] : per_left) {
            row.resize(n);
            if (u == PbwTerm{}) row[index_of(x)] -= Qc(1);
            rows.push_back(row);
            rhs.push_back(Qc(0));
        }
    }
    std::vector<Qc> norm(n);
    norm[index_of(PbwTerm{})] = Qc(1);
    rows.push_back(norm);
    rhs.push_back(Qc(1));
    QMat m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    auto sol = solve(std::move(m), std::move(rhs));
    if (!sol) throw std::runtime_error("oracle system inconsistent");
    return (*sol)[index_of(PbwTerm{0, 1, 1})];
}

}  // namespace

int main() {
    SuiteConfig base;

    // 1. Structural exactness of the hopf suite, all instances, residual 0.
    {
        bool ok = true;
        std::string why;
        for (const auto& name : finite_instances()) {
            Instance inst = load_instance(inst_path(name));
            Report rep = run_suite(inst, "hopf", base);
            if (!all_exact(rep, &why)) {
                ok = false;
                why = name + ": " + why;
                break;
            }
        }
        if (ok) {
            Instance inst = load_instance(inst_path("suq2.json"));
            SuiteConfig cfg = base;
            cfg.degree = 6;
            Report rep = run_suite(inst, "hopf", cfg);
            if (!all_exact(rep, &why)) {
                ok = false;
                why = "suq2: " + why;
            }
        }
        report(1, "hopf suite exact on all bundled instances (degree 6, q = 1/2)", ok, why);
    }

    // 2. Haar derivation: unique, positive; compact invariance exact and
    // h(cc*) = 4/5 against the independent linear-system oracle.
    {
        bool ok = true;
        std::string why;
        for (const auto& name : finite_instances()) {
            Instance inst = load_instance(inst_path(name));
            Report rep = run_suite(inst, "haar", base);
            const CheckEntry* uniq = find_entry(rep, "haar.unique");
            const CheckEntry* pd = find_entry(rep, "haar.gram_positive_exact");
            const CheckEntry* me = find_entry(rep, "haar.gram_min_eigenvalue");
            if (!uniq || !uniq->pass || !pd || !pd->pass || !me || !(me->residual > 1e-10)) {
                ok = false;
                why = name;
                break;
            }
            if (!rep.pass()) {
                ok = false;
                why = name;
                break;
            }
        }
        if (ok) {
            Instance inst = load_instance(inst_path("suq2.json"));
            SuiteConfig cfg = base;
            cfg.degree = 6;
            Report rep = run_suite(inst, "haar", cfg);
            if (!all_exact(rep, &why)) ok = false;
            suq2::Engine eng(Rational(1, 2), 4);
            Qc oracle = haar_cc_by_invariance(eng);
            if (!(oracle == Qc(Rational(4, 5))) ||
                !(eng.haar_mono(suq2::PbwTerm{0, 1, 1}) == Rational(4, 5))) {
                ok = false;
                why = "h(cc*) != 4/5";
            }
        }
        report(2, "Haar functionals: unique, positive definite, h(cc*) = 4/5 oracle", ok,
               why);
    }

    // 3. Kac collapse on every finite instance, exact.
    {
        bool ok = true;
        std::string why;
        for (const auto& name : finite_instances()) {
            Instance inst = load_instance(inst_path(name));
            Report rep = run_suite(inst, "modular", base);
            const CheckEntry* kc = find_entry(rep, "modular.kac_collapse");
            std::string all_why;
            if (!kc || !kc->pass || !all_exact(rep, &all_why)) {
                ok = false;
                why = name + " " + all_why;
                break;
            }
        }
        report(3, "Kac collapse (S^2 = id, delta = 1, rho = id, mu = 1) exact", ok, why);
    }

    // 4. One-parameter group laws, P-operator law, uniqueness round trips.
    {
        bool ok = true;
        std::string why;
        {
            Instance inst = load_instance(inst_path("suq2.json"));
            SuiteConfig cfg = base;
            cfg.degree = 4;
            Report rep = run_suite(inst, "oneparam", cfg);
            if (!all_within(rep, 1e-9, &why)) ok = false;
        }
        if (ok) {
            for (const auto& name : finite_instances()) {
                Instance inst = load_instance(inst_path(name));
                Report rep = run_suite(inst, "oneparam", base);
                if (!all_within(rep, 1e-9, &why)) {
                    ok = false;
                    why = name + ": " + why;
                    break;
                }
            }
        }
        report(4, "group/star/invariance/P-operator laws and uniqueness < 1e-9", ok, why);
    }

    // 5. The full identity table at q in {1/2, 1/3, 9/10}, degree 4.
    {
        bool ok = true;
        std::string why;
        for (const char* qs : {"1/2", "1/3", "9/10"}) {
            Instance inst = load_instance(inst_path("suq2.json"));
            SuiteConfig cfg = base;
            cfg.degree = 4;
            cfg.q_override = Rational::parse(qs);
            Report rep = run_suite(inst, "identities", cfg);
            if (!all_within(rep, 1e-9, &why)) {
                ok = false;
                why = std::string("q=") + qs + ": " + why;
                break;
            }
        }
        report(5, "all sixteen analytic identities < 1e-9 at q = 1/2, 1/3, 9/10", ok, why);
    }

    // 6. The dual dictionary: formulas both sides, delta^ checks, f-link,
    // resolved sign logged.
    {
        bool ok = true;
        std::string why;
        {
            Instance inst = load_instance(inst_path("suq2.json"));
            SuiteConfig cfg = base;
            cfg.degree = 4;
            Report rep = run_suite(inst, "duality", cfg);
            if (!all_within(rep, 1e-9, &why)) ok = false;
            Report mod = run_suite(inst, "modular", cfg);
            const CheckEntry* sign = find_entry(mod, "modular.f_sign_resolved");
            if (!sign || sign->residual != -1.0) {
                ok = false;
                why = "f sign not resolved to -1";
            }
        }
        if (ok) {
            for (const auto& name : finite_instances()) {
                Instance inst = load_instance(inst_path(name));
                Report rep = run_suite(inst, "duality", base);
                if (!all_within(rep, 1e-9, &why)) {
                    ok = false;
                    why = name + ": " + why;
                    break;
                }
            }
        }
        report(6, "dual analytic dictionary, delta^{iz} = eps sigma_{-z}, delta^z = f_{-2z}",
               ok, why);
    }

    // 7. Plancherel and biduality, exact on every finite instance.
    {
        bool ok = true;
        std::string why;
        for (const auto& name : finite_instances()) {
            Instance inst = load_instance(inst_path(name));
            Report rep = run_suite(inst, "duality", base);
            const CheckEntry* pl = find_entry(rep, "duality.plancherel");
            const CheckEntry* bi = find_entry(rep, "duality.bidual_iso");
            if (!pl || !pl->pass || pl->residual != 0.0 || !bi || !bi->pass) {
                ok = false;
                why = name;
                break;
            }
        }
        report(7, "Plancherel exact and bidual *-isomorphism verified", ok, why);
    }

    // 8. Fault sensitivity through the CLI: nonzero residual at least the
    // injected magnitude, exit code 1.
    {
        bool ok = true;
        std::string why;
        struct Fault {
            const char* file;
            const char* suite;
            double magnitude;
        };
        for (const Fault& f : {Fault{"faults/c_z2_broken_coproduct.json", "hopf", 1.0},
                               Fault{"faults/suq2_haar_perturbed.json", "haar", 1e-3},
                               Fault{"faults/suq2_f_sign_flipped.json", "modular", 1.5}}) {
            CliResult r = run_cli("\"" + inst_path(f.file) + "\" --suite " + f.suite +
                                  " --format json");
            if (r.exit_code != 1) {
                ok = false;
                why = std::string(f.file) + " exit " + std::to_string(r.exit_code);
                break;
            }
            auto j = nlohmann::json::parse(r.stdout_text, nullptr, false);
            if (j.is_discarded() || j["pass"].get<bool>()) {
                ok = false;
                why = std::string(f.file) + " report not failing";
                break;
            }
            double worst = 0;
            for (const auto& e : j["entries"])
                if (!e["pass"].get<bool>())
                    worst = std::max(worst, e["residual"].get<double>());
            if (!(worst >= f.magnitude)) {
                ok = false;
                why = std::string(f.file) + " worst failing residual " +
                      format_double(worst) + " < " + format_double(f.magnitude);
                break;
            }
        }
        report(8, "injected faults fail their suites with residual >= magnitude, exit 1", ok,
               why);
    }

    if (failures) {
        std::printf("%d criteria FAILED\n", failures);
        return 1;
    }
    std::printf("all 8 acceptance criteria passed\n");
    return 0;
}
