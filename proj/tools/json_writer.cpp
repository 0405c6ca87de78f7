#include "json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace kinematica::cli {
namespace {

std::string format_float(double v, int precision) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    std::string s = buf;
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

bool is_flat(const Json& j) {
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

void write(std::ostream& os, const Json& j, int precision, int indent) {
    const std::string pad(indent * 2, ' '), inner((indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) { os << "{}"; return; }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << inner << Json(it.key()).dump() << ": ";
                write(os, it.value(), precision, indent + 1);
            }
            os << "\n" << pad << "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) { os << "[]"; return; }
            if (is_flat(j)) {
                os << "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) os << ", ";
                    write(os, j[i], precision, indent);
                }
                os << "]";
                return;
            }
            os << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ",\n";
                os << inner;
                write(os, j[i], precision, indent + 1);
            }
            os << "\n" << pad << "]";
            return;
        }
        case Json::value_t::number_float: os << format_float(j.get<double>(), precision); return;
        default: os << j.dump(); return;
    }
}

}  // namespace

int float_precision() {
    if (const char* env = std::getenv("KINEMATICA_PRECISION")) {
        char* end = nullptr;
        const long p = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && p >= 1 && p <= 17) return static_cast<int>(p);
    }
    return 17;
}

void write_json(std::ostream& os, const Json& j, int precision) {
    write(os, j, precision, 0);
    os << "\n";
}

}  // namespace kinematica::cli
