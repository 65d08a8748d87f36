#include "rxlimit/chipdb.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "rxlimit/errors.hpp"

#ifndef RXLIMIT_DATA_DIR
#define RXLIMIT_DATA_DIR "data"
#endif

namespace rxlimit {

namespace {

std::optional<DeviceClass> device_from_string(std::string_view s) {
    if (s == "server") return DeviceClass::Server;
    if (s == "laptop") return DeviceClass::Laptop;
    if (s == "tablet") return DeviceClass::Tablet;
    if (s == "smartphone") return DeviceClass::Smartphone;
    return std::nullopt;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

double parse_number(std::string_view field, std::size_t line_no, std::size_t field_no) {
    const std::string text(field);
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty() || !std::isfinite(value)) {
        throw ParseError("'" + text + "' is not a number", line_no, field_no);
    }
    return value;
}

void validate_row(const ChipSpec& spec, std::size_t line_no) {
    if (spec.package_cm2 == 0.0) {
        throw ZeroArea("line " + std::to_string(line_no) + " (" + spec.product +
                       "): package size is zero");
    }
    if (spec.package_cm2 < 0.0 || spec.power_w <= 0.0 || spec.node_nm <= 0.0) {
        throw ValidationError("line " + std::to_string(line_no) + " (" + spec.product +
                              "): power, package size and node must be positive");
    }
    const double computed = heat_density(spec);
    if (std::abs(spec.stated_heat_density_w_cm2 - computed) > kHeatDensityToleranceWPerCm2) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "line %zu (%s): stated heat density %.2f disagrees with power/area %.2f",
                      line_no, spec.product.c_str(), spec.stated_heat_density_w_cm2, computed);
        throw ValidationError(buf);
    }
}

}  // namespace

const char* to_string(DeviceClass c) noexcept {
    switch (c) {
        case DeviceClass::Server: return "server";
        case DeviceClass::Laptop: return "laptop";
        case DeviceClass::Tablet: return "tablet";
        case DeviceClass::Smartphone: return "smartphone";
    }
    return "?";
}

double heat_density(const ChipSpec& spec) {
    if (spec.package_cm2 == 0.0) throw ZeroArea(spec.product + ": package size is zero");
    return spec.power_w / spec.package_cm2;
}

std::vector<ChipSpec> parse_catalog(std::string_view text) {
    std::vector<ChipSpec> specs;
    bool header_seen = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        if (!header_seen) {
            if (line != kCatalogHeader) {
                throw ParseError("expected header '" + std::string(kCatalogHeader) + "'", line_no, 1);
            }
            header_seen = true;
            continue;
        }

        const std::vector<std::string_view> fields = split_fields(line);
        if (fields.size() != 7) {
            throw ParseError("expected 7 fields, got " + std::to_string(fields.size()), line_no,
                             fields.size());
        }

        const auto device = device_from_string(fields[0]);
        if (!device) {
            throw ParseError("unknown device class '" + std::string(fields[0]) + "'", line_no, 1);
        }

        ChipSpec spec{
            .device = *device,
            .company = std::string(fields[1]),
            .product = std::string(fields[2]),
            .node_nm = parse_number(fields[3], line_no, 4),
            .power_w = parse_number(fields[4], line_no, 5),
            .package_cm2 = parse_number(fields[5], line_no, 6),
            .stated_heat_density_w_cm2 = parse_number(fields[6], line_no, 7),
        };
        validate_row(spec, line_no);
        specs.push_back(std::move(spec));
    }

    if (!header_seen) throw ParseError("missing catalog header", line_no, 1);
    return specs;
}

std::vector<ChipSpec> load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open catalog file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_catalog(buffer.str());
}

std::string serialize_catalog(std::span<const ChipSpec> specs) {
    std::string out(kCatalogHeader);
    out += '\n';
    char buf[96];
    for (const ChipSpec& spec : specs) {
        out += to_string(spec.device);
        out += ',';
        out += spec.company;
        out += ',';
        out += spec.product;
        std::snprintf(buf, sizeof(buf), ",%g,%g,%.2f,%.2f", spec.node_nm, spec.power_w,
                      spec.package_cm2, spec.stated_heat_density_w_cm2);
        out += buf;
        out += '\n';
    }
    return out;
}

std::filesystem::path default_catalog_path() {
    if (const char* env = std::getenv("RXLIMIT_CATALOG"); env && *env) {
        return env;
    }
    const std::filesystem::path local = std::filesystem::path("data") / "chip_catalog.csv";
    std::error_code ec;
    if (std::filesystem::exists(local, ec)) return local;
    return std::filesystem::path(RXLIMIT_DATA_DIR) / "chip_catalog.csv";
}

}  // namespace rxlimit
