#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqg/scalars.hpp"

namespace aqg {

struct CheckEntry {
    std::string id;      // stable slug, e.g. "hopf.coassociativity"
    std::string anchor;  // the law being checked, written out
    double residual = 0.0;
    bool pass = false;
    std::optional<std::string> witness;  // failing input, when there is one

    static CheckEntry make(std::string id, std::string anchor, double residual,
                           double tol, std::optional<std::string> witness = {});
    // For booleans without a numeric residual (e.g. a rank condition).
    static CheckEntry flag(std::string id, std::string anchor, bool ok,
                           std::optional<std::string> witness = {});
    // Informational entry that never fails the suite (exploratory output).
    static CheckEntry info(std::string id, std::string anchor, double value);
};

struct Report {
    std::string suite;
    std::string instance;
    std::vector<std::pair<std::string, std::string>> config;  // key -> preformatted value
    std::vector<CheckEntry> entries;

    void add(CheckEntry e) { entries.push_back(std::move(e)); }
    void merge(const Report& other);
    void sort_entries();
    bool pass() const;

    // Byte-deterministic renderings: fixed key order, floats with 17
    // significant digits.
    std::string to_json() const;
    std::string to_text() const;
};

std::string format_double(double v);
std::string json_escape(const std::string& s);

}  // namespace aqg
