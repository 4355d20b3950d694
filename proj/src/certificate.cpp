#include "hypinvol/certificate.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hypinvol {

bool Certificate::pass() const {
    for (const auto& [name, r] : residuals) {
        (void)name;
        if (!(std::fabs(r) <= tolerance)) return false;
    }
    return true;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

namespace {

void emit_map(std::ostringstream& os, const std::map<std::string, double>& m) {
    os << "{";
    bool first = true;
    for (const auto& [k, v] : m) {
        if (!first) os << ",";
        first = false;
        os << "\"" << json_escape(k) << "\":" << format_real(v);
    }
    os << "}";
}

}  // namespace

std::string Certificate::to_json() const {
    std::ostringstream os;
    os << "{";
    os << "\"caveats\":[";
    for (size_t i = 0; i < caveats.size(); ++i) {
        if (i) os << ",";
        os << "\"" << json_escape(caveats[i]) << "\"";
    }
    os << "],";
    os << "\"claim_id\":\"" << json_escape(claim_id) << "\",";
    os << "\"residuals\":";
    emit_map(os, residuals);
    os << ",\"tolerance\":" << format_real(tolerance);
    os << ",\"values\":";
    emit_map(os, values);
    os << ",\"verdict\":\"" << verdict() << "\"";
    os << "}";
    return os.str();
}

}  // namespace hypinvol
