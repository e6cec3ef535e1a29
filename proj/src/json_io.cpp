#include "zetawalk/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace zetawalk {

std::string format_double(double v) {
    if (v == 0.0) return "0";  // normalizes -0 as well
    if (!std::isfinite(v)) throw std::invalid_argument("cannot format non-finite value");
    char buf[64];
    for (int digits = 1; digits <= 15; ++digits) {
        std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

namespace {

using nlohmann::ordered_json;

void escape_string(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
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
    out += '"';
}

void dump(const ordered_json& j, std::string& out, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                escape_string(key, out);
                out += ": ";
                dump(value, out, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Flat arrays of numbers stay on one line.
            bool scalars_only = true;
            for (const auto& v : j)
                if (v.is_structured()) scalars_only = false;
            if (scalars_only) {
                out += "[";
                bool first = true;
                for (const auto& v : j) {
                    if (!first) out += ", ";
                    first = false;
                    dump(v, out, depth);
                }
                out += "]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump(v, out, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case ordered_json::value_t::string:
            escape_string(j.get<std::string>(), out);
            return;
        case ordered_json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case ordered_json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        case ordered_json::value_t::number_integer:
            out += std::to_string(j.get<long long>());
            return;
        case ordered_json::value_t::number_unsigned:
            out += std::to_string(j.get<unsigned long long>());
            return;
        default:
            out += "null";
            return;
    }
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& j) {
    std::string out;
    dump(j, out, 0);
    out += "\n";
    return out;
}

nlohmann::ordered_json complex_to_json(std::complex<double> z) {
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

}  // namespace zetawalk
