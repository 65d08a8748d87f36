#include "rxlimit/unit_text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace rxlimit {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Splits "<number><suffix>" with optional whitespace between the parts.
// Returns false if the numeric part is missing or malformed.
bool split_quantity(std::string_view text, double& value, std::string& suffix) {
    const std::string s(text);
    char* end = nullptr;
    value = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || !std::isfinite(value)) return false;
    std::string_view rest(end);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) {
        rest.remove_prefix(1);
    }
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) {
        rest.remove_suffix(1);
    }
    suffix = lower(rest);
    return true;
}

}  // namespace

Rate parse_rate(std::string_view text) {
    double value = 0.0;
    std::string suffix;
    if (!split_quantity(text, value, suffix)) {
        throw std::invalid_argument("cannot parse rate '" + std::string(text) + "'");
    }
    double scale = 1.0;
    if (suffix == "" || suffix == "bps") {
        scale = 1.0;
    } else if (suffix == "kbps") {
        scale = 1e3;
    } else if (suffix == "mbps") {
        scale = 1e6;
    } else if (suffix == "gbps") {
        scale = 1e9;
    } else {
        throw std::invalid_argument("unknown rate unit '" + suffix + "' (use bps/kbps/Mbps/Gbps)");
    }
    return Rate::bps(value * scale);
}

double parse_frequency_hz(std::string_view text) {
    double value = 0.0;
    std::string suffix;
    if (!split_quantity(text, value, suffix)) {
        throw std::invalid_argument("cannot parse frequency '" + std::string(text) + "'");
    }
    double scale = 1.0;
    if (suffix == "" || suffix == "hz") {
        scale = 1.0;
    } else if (suffix == "khz") {
        scale = 1e3;
    } else if (suffix == "mhz") {
        scale = 1e6;
    } else if (suffix == "ghz") {
        scale = 1e9;
    } else {
        throw std::invalid_argument("unknown frequency unit '" + suffix + "' (use Hz/kHz/MHz/GHz)");
    }
    return value * scale;
}

std::string format_rate(Rate rate) {
    const double bps = rate.value();
    const char* unit = "bps";
    double scaled = bps;
    if (bps >= 1e9) {
        scaled = bps / 1e9;
        unit = "Gbps";
    } else if (bps >= 1e6) {
        scaled = bps / 1e6;
        unit = "Mbps";
    } else if (bps >= 1e3) {
        scaled = bps / 1e3;
        unit = "kbps";
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3g %s", scaled, unit);
    return buf;
}

std::string format_db(double db) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f dB", db);
    return buf;
}

std::string format_seconds(double seconds) {
    if (std::isinf(seconds)) return "unbounded";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3g s", seconds);
    return buf;
}

}  // namespace rxlimit
