#include <doctest.h>

#include "aqg/report.hpp"

using namespace aqg;

TEST_CASE("report JSON is byte deterministic with pinned float formatting") {
    Report r;
    r.suite = "hopf";
    r.instance = "C[Z2]";
    r.config = {{"degree", "6"}, {"abs_tol", format_double(1e-9)}};
    r.add(CheckEntry::make("b.second", "law B", 0.0, 1e-9));
    r.add(CheckEntry::make("a.first", "law \"A\"", 1.2345678901234567e-3, 1e-9,
                           std::string("witness x")));
    r.sort_entries();

    std::string one = r.to_json();
    std::string two = r.to_json();
    CHECK(one == two);
    CHECK(one.find("\"suite\":\"hopf\"") == 1);
    // entries sorted by id
    CHECK(one.find("a.first") < one.find("b.second"));
    // 17 significant digits
    CHECK(one.find("0.0012345678901234567") != std::string::npos);
    // escaped quote in the anchor
    CHECK(one.find("law \\\"A\\\"") != std::string::npos);
    CHECK_FALSE(r.pass());

    Report ok;
    ok.suite = "haar";
    ok.instance = "x";
    ok.add(CheckEntry::make("only", "law", 0.0, 1e-9));
    CHECK(ok.pass());
    CHECK(ok.to_text().find("PASS") != std::string::npos);
}

TEST_CASE("flag and info entries") {
    CheckEntry f = CheckEntry::flag("id", "anchor", false, std::string("w"));
    CHECK_FALSE(f.pass);
    CHECK(f.residual == 1.0);
    CheckEntry i = CheckEntry::info("id2", "anchor2", -1.0);
    CHECK(i.pass);
    CHECK(i.residual == -1.0);
}
