#pragma once

// Parsing and formatting of unit-suffixed quantities at the CLI boundary.
// Rates accept bps/kbps/Mbps/Gbps, frequencies Hz/kHz/MHz/GHz (both
// case-insensitive); bare numbers mean the base unit.

#include <string>
#include <string_view>

#include "rxlimit/core.hpp"

namespace rxlimit {

/// "4Gbps", "24.3 Mbps", "1e9" -> Rate. Throws std::invalid_argument.
Rate parse_rate(std::string_view text);

/// "500MHz", "2e7" -> Hz. Throws std::invalid_argument.
double parse_frequency_hz(std::string_view text);

/// Auto-scaled, 3 significant digits: "9.74 Gbps", "39.9 Mbps".
std::string format_rate(Rate rate);

/// "0.50 dB"
std::string format_db(double db);

/// "3.97 s", or "unbounded" for an infinite duration.
std::string format_seconds(double seconds);

}  // namespace rxlimit
