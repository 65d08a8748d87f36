#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "rxlimit/chipdb.hpp"
#include "rxlimit/errors.hpp"

using namespace rxlimit;

namespace {

std::vector<ChipSpec> bundled() { return load_catalog(default_catalog_path()); }

double rounded2(double v) { return std::round(v * 100.0) / 100.0; }

const ChipSpec* find_product(const std::vector<ChipSpec>& specs, std::string_view product) {
    for (const ChipSpec& spec : specs) {
        if (spec.product == product) return &spec;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("bundled catalog loads and validates") {
    const auto specs = bundled();
    CHECK(specs.size() == 12);

    for (const ChipSpec& spec : specs) {
        CHECK(std::abs(spec.stated_heat_density_w_cm2 - heat_density(spec)) <=
              kHeatDensityToleranceWPerCm2);
    }
}

TEST_CASE("named heat densities match at two decimals") {
    const auto specs = bundled();

    const ChipSpec* snapdragon = find_product(specs, "Snapdragon 835");
    REQUIRE(snapdragon != nullptr);
    CHECK(rounded2(heat_density(*snapdragon)) == 5.00);

    const ChipSpec* exynos = find_product(specs, "Exynos 7420");
    REQUIRE(exynos != nullptr);
    CHECK(rounded2(heat_density(*exynos)) == 7.05);

    const ChipSpec* i7 = find_product(specs, "Core i7-7920HQ");
    REQUIRE(i7 != nullptr);
    CHECK(rounded2(heat_density(*i7)) == 3.83);
    CHECK(i7->device == DeviceClass::Laptop);
    CHECK(i7->power_w == 45.0);
    CHECK(i7->package_cm2 == 11.76);
}

TEST_CASE("heat density unit case and zero area") {
    const ChipSpec unit{DeviceClass::Smartphone, "x", "unit", 10, 1.0, 1.0, 1.0};
    CHECK(heat_density(unit) == 1.0);

    const ChipSpec degenerate{DeviceClass::Smartphone, "x", "flat", 10, 1.0, 0.0, 1.0};
    CHECK_THROWS_AS(heat_density(degenerate), ZeroArea);
}

TEST_CASE("parser reports row and field locations") {
    const std::string header(kCatalogHeader);

    CHECK_THROWS_AS(parse_catalog("device,company\n"), ParseError);
    CHECK_THROWS_AS(parse_catalog(""), ParseError);
    CHECK_THROWS_AS(parse_catalog(header + "\nsmartphone,Acme,X1,10,3.6\n"), ParseError);

    try {
        parse_catalog(header + "\nsmartphone,Acme,X1,10,oops,0.72,5.00\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
    }

    CHECK_THROWS_AS(parse_catalog(header + "\ntoaster,Acme,X1,10,3.6,0.72,5.00\n"), ParseError);
}

TEST_CASE("row validation catches inconsistent and degenerate entries") {
    const std::string header(kCatalogHeader);

    // Stated density off by more than 0.05 W/cm^2.
    CHECK_THROWS_AS(parse_catalog(header + "\nsmartphone,Acme,X1,10,3.6,0.72,5.10\n"),
                    ValidationError);
    // Zero package size.
    CHECK_THROWS_AS(parse_catalog(header + "\nsmartphone,Acme,X1,10,3.6,0,5.00\n"), ZeroArea);
    // Negative power.
    CHECK_THROWS_AS(parse_catalog(header + "\nsmartphone,Acme,X1,10,-3.6,0.72,-5.00\n"),
                    ValidationError);

    // Right at the tolerance edge is accepted.
    CHECK_NOTHROW(parse_catalog(header + "\nsmartphone,Acme,X1,10,3.6,0.72,5.05\n"));
}

TEST_CASE("comments and blank lines are ignored") {
    const std::string text = "# leading comment\n\n" + std::string(kCatalogHeader) +
                             "\n# row comment\nsmartphone,Acme,X1,10,3.6,0.72,5.00\n\n";
    const auto specs = parse_catalog(text);
    REQUIRE(specs.size() == 1);
    CHECK(specs[0].company == "Acme");
    CHECK(specs[0].node_nm == 10.0);
}

TEST_CASE("serialize -> parse -> serialize is byte-identical") {
    const auto specs = bundled();
    const std::string once = serialize_catalog(specs);
    const auto reparsed = parse_catalog(once);
    REQUIRE(reparsed.size() == specs.size());
    const std::string twice = serialize_catalog(reparsed);
    CHECK(once == twice);

    // The bundled file's data section is already in canonical form.
    CHECK(once.find("server,Intel,Xeon E7-8894 v4,14,165,23.63,6.98\n") != std::string::npos);
    CHECK(once.find("smartphone,Samsung,Exynos 5433,20,6.1,1.13,5.40\n") != std::string::npos);
}
