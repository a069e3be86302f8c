#include "regraph/format.hpp"

#include <cmath>
#include <cstdio>

namespace regraph {

namespace {

constexpr int kSignificantDigits = 12;

std::string fixed(double x, int decimals) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
    return buf;
}

} // namespace

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == std::rint(x) && std::abs(x) < 1e15) {
        return fixed(x, 0);
    }
    const int exponent =
        static_cast<int>(std::floor(std::log10(std::abs(x))));
    const int decimals = std::max(0, kSignificantDigits - 1 - exponent);
    return fixed(x, decimals);
}

std::string format_tuple(const std::vector<double>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_real(values[i]);
    }
    out += ")";
    return out;
}

std::string json_number(double x) {
    if (std::isfinite(x)) return format_real(x);
    return "\"" + format_real(x) + "\"";
}

std::string json_array(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += json_number(values[i]);
    }
    out += "]";
    return out;
}

} // namespace regraph
