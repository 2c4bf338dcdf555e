#include "aqg/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace aqg {

CheckEntry CheckEntry::make(std::string id, std::string anchor, double residual,
                            double tol, std::optional<std::string> witness) {
    CheckEntry e;
    e.id = std::move(id);
    e.anchor = std::move(anchor);
    e.residual = residual;
    e.pass = std::isfinite(residual) && residual <= tol;
    if (!e.pass) e.witness = std::move(witness);
    return e;
}

CheckEntry CheckEntry::flag(std::string id, std::string anchor, bool ok,
                            std::optional<std::string> witness) {
    CheckEntry e;
    e.id = std::move(id);
    e.anchor = std::move(anchor);
    e.residual = ok ? 0.0 : 1.0;
    e.pass = ok;
    if (!ok) e.witness = std::move(witness);
    return e;
}

CheckEntry CheckEntry::info(std::string id, std::string anchor, double value) {
    CheckEntry e;
    e.id = std::move(id);
    e.anchor = std::move(anchor);
    e.residual = value;
    e.pass = true;
    return e;
}

void Report::merge(const Report& other) {
    for (const auto& e : other.entries) entries.push_back(e);
}

void Report::sort_entries() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const CheckEntry& a, const CheckEntry& b) { return a.id < b.id; });
}

bool Report::pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string Report::to_json() const {
    std::ostringstream o;
    o << "{\"suite\":\"" << json_escape(suite) << "\"";
    o << ",\"instance\":\"" << json_escape(instance) << "\"";
    o << ",\"config\":{";
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (i) o << ",";
        o << "\"" << json_escape(config[i].first) << "\":" << config[i].second;
    }
    o << "},\"entries\":[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (i) o << ",";
        o << "{\"id\":\"" << json_escape(e.id) << "\"";
        o << ",\"anchor\":\"" << json_escape(e.anchor) << "\"";
        o << ",\"residual\":" << format_double(e.residual);
        o << ",\"pass\":" << (e.pass ? "true" : "false");
        if (e.witness) o << ",\"witness\":\"" << json_escape(*e.witness) << "\"";
        o << "}";
    }
    o << "],\"pass\":" << (pass() ? "true" : "false") << "}";
    return o.str();
}

std::string Report::to_text() const {
    std::ostringstream o;
    o << "suite " << suite << " on " << instance << "\n";
    for (const auto& [k, v] : config) o << "  " << k << " = " << v << "\n";
    std::size_t width = 0;
    for (const auto& e : entries) width = std::max(width, e.id.size());
    for (const auto& e : entries) {
        o << (e.pass ? "  pass  " : "  FAIL  ") << e.id;
        o << std::string(width - e.id.size() + 2, ' ');
        o << "residual " << format_double(e.residual);
        o << "    [" << e.anchor << "]";
        if (e.witness) o << "  witness: " << *e.witness;
        o << "\n";
    }
    o << (pass() ? "PASS" : "FAIL") << " (" << entries.size() << " checks)\n";
    return o.str();
}

}  // namespace aqg
