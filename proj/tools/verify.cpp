#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aqg/instance.hpp"
#include "aqg/suites.hpp"

namespace {

// Grid syntax: "default" or a comma list of points, each "re" or "re:im"
// with exact rational components, e.g. "0,1,-1,0:1,0:-1,0:-1/2,1/2:1/3,0:2".
std::vector<aqg::Qc> parse_grid(const std::string& text) {
    if (text == "default") return aqg::default_z_grid();
    std::vector<aqg::Qc> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        if (tok.empty()) throw aqg::ParseError("empty grid entry");
        std::size_t colon = tok.find(':');
        aqg::Rational re = aqg::Rational::parse(colon == std::string::npos
                                                    ? tok
                                                    : tok.substr(0, colon));
        aqg::Rational im = colon == std::string::npos
                               ? aqg::Rational(0)
                               : aqg::Rational::parse(tok.substr(colon + 1));
        out.emplace_back(re, im);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw aqg::ParseError("empty z grid");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verify — structural and analytic identity suites for algebraic quantum "
                 "group instances"};
    std::string path;
    std::string suite = "all";
    std::string zgrid = "default";
    std::string format = "text";
    std::string qstr;
    int degree = 6;
    int jobs = 1;
    double tolerance = 1e-9;

    app.add_option("instance", path, "instance file (JSON)")->required();
    app.add_option("--suite", suite,
                   "suite to run: hopf, haar, modular, oneparam, identities, duality, all")
        ->default_val("all");
    app.add_option("--degree", degree, "monomial degree cap for the compact instance")
        ->default_val(6);
    app.add_option("--q", qstr, "override q for the compact instance, as num/den");
    app.add_option("--z-grid", zgrid, "\"default\" or comma list of re[:im] rational points")
        ->default_val("default");
    app.add_option("--tolerance", tolerance, "absolute tolerance for numeric residuals")
        ->default_val(1e-9);
    app.add_option("--format", format, "output format: text or json")->default_val("text");
    app.add_option("--jobs", jobs, "suite worker count")->default_val(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!aqg::is_suite_name(suite)) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return 2;
    }
    if (format != "text" && format != "json") {
        std::cerr << "unknown format '" << format << "'\n";
        return 2;
    }
    if (degree < 1 || jobs < 1 || tolerance <= 0) {
        std::cerr << "degree and jobs must be positive, tolerance must be > 0\n";
        return 2;
    }

    aqg::Instance inst;
    aqg::SuiteConfig cfg;
    try {
        inst = aqg::load_instance(path);
        cfg.degree = degree;
        cfg.jobs = jobs;
        cfg.tol.abs_tol = tolerance;
        cfg.z_grid = parse_grid(zgrid);
        if (!qstr.empty()) {
            cfg.q_override = aqg::Rational::parse(qstr);
            if (!(*cfg.q_override > aqg::Rational(0) && *cfg.q_override < aqg::Rational(1))) {
                std::cerr << "q must lie strictly between 0 and 1\n";
                return 2;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    aqg::Report rep = aqg::run_suite(inst, suite, cfg);
    if (format == "json")
        std::cout << rep.to_json() << "\n";
    else
        std::cout << rep.to_text();
    return rep.pass() ? 0 : 1;
}
