#pragma once

// Chip specification catalog: device class, vendor, process node, full-load
// power, package size, and the stated heat density. The catalog is a plain
// CSV resource with a fixed header so users can extend it without
// rebuilding; every row is validated on load (positive package size, stated
// heat density within 0.05 W/cm^2 of power/area).

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rxlimit/core.hpp"

namespace rxlimit {

enum class DeviceClass { Server, Laptop, Tablet, Smartphone };

const char* to_string(DeviceClass c) noexcept;

struct ChipSpec {
    DeviceClass device;
    std::string company;
    std::string product;
    double node_nm;
    double power_w;
    double package_cm2;
    double stated_heat_density_w_cm2;
};

/// Power per package area in W/cm^2. Throws ZeroArea.
double heat_density(const ChipSpec& spec);

/// Catalog header, also the canonical serialization column order.
inline constexpr std::string_view kCatalogHeader =
    "device,company,product,node_nm,power_w,package_cm2,heat_density_w_cm2";

/// Allowed disagreement between a stated heat density and power/area.
inline constexpr double kHeatDensityToleranceWPerCm2 = 0.05;

/// Parses catalog text. Blank lines and lines starting with '#' are skipped.
/// Throws ParseError with the row/field location on malformed input,
/// ZeroArea / ValidationError when a row fails its invariants.
std::vector<ChipSpec> parse_catalog(std::string_view text);

/// Reads and parses a catalog file. Throws Error if the file cannot be read.
std::vector<ChipSpec> load_catalog(const std::filesystem::path& path);

/// Canonical text form: header line plus one row per spec.
std::string serialize_catalog(std::span<const ChipSpec> specs);

/// Where the bundled catalog lives: $RXLIMIT_CATALOG if set, else
/// data/chip_catalog.csv under the current directory, else the build-time
/// data directory.
std::filesystem::path default_catalog_path();

}  // namespace rxlimit
