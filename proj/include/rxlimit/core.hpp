#pragma once

// Foundation types shared by every module: physical constants, the
// unit-bearing scalars (Rate, Power, Temperature), and the parameter records
// describing the receiver (chip, RF chains, surface plate). All types are
// immutable value objects after construction and validate their invariants in
// the constructor, so downstream code never re-checks units or signs.

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rxlimit {

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

inline bool finite(double v) { return std::isfinite(v); }

}  // namespace detail

/// Physical constants used by the energy model. The Boltzmann constant
/// defaults to the 3-significant-figure value 1.38e-23 J/K so that derived
/// headline numbers match the published arithmetic they came from; pass an
/// override to use a higher-precision value.
class PhysicalConstants {
public:
    PhysicalConstants() = default;

    explicit PhysicalConstants(double boltzmann_k) : k_(boltzmann_k) {
        detail::require(detail::finite(k_) && k_ > 0.0, "boltzmann_k must be finite and > 0");
    }

    double boltzmann_k() const noexcept { return k_; }
    double ln2() const noexcept { return ln2_; }

private:
    double k_ = 1.38e-23;                      // J/K
    double ln2_ = std::numbers::ln2_v<double>; // dimensionless
};

/// Data rate in bits per second. One canonical internal unit; helpers exist
/// for the common prefixes so call sites never multiply by 1e9 inline.
class Rate {
public:
    Rate() = default;

    explicit Rate(double bits_per_second) : bps_(bits_per_second) {
        detail::require(detail::finite(bps_) && bps_ >= 0.0, "rate must be finite and >= 0 bits/s");
    }

    static Rate bps(double v) { return Rate(v); }
    static Rate kbps(double v) { return Rate(v * 1e3); }
    static Rate mbps(double v) { return Rate(v * 1e6); }
    static Rate gbps(double v) { return Rate(v * 1e9); }

    double value() const noexcept { return bps_; }
    double in_gbps() const noexcept { return bps_ / 1e9; }

    friend auto operator<=>(const Rate&, const Rate&) = default;

private:
    double bps_ = 0.0;
};

/// Power in watts, non-negative.
class Power {
public:
    Power() = default;

    explicit Power(double watts) : w_(watts) {
        detail::require(detail::finite(w_) && w_ >= 0.0, "power must be finite and >= 0 W");
    }

    static Power watts(double v) { return Power(v); }
    static Power milliwatts(double v) { return Power(v * 1e-3); }

    double value() const noexcept { return w_; }

    friend auto operator<=>(const Power&, const Power&) = default;

private:
    double w_ = 0.0;
};

/// Absolute temperature in kelvin, strictly positive. Celsius conversions use
/// the exact 273.15 offset.
class Temperature {
public:
    Temperature() = default;

    explicit Temperature(double kelvin) : k_(kelvin) {
        detail::require(detail::finite(k_) && k_ > 0.0, "temperature must be finite and > 0 K");
    }

    static Temperature kelvin(double v) { return Temperature(v); }
    static Temperature celsius(double v) { return Temperature(v + 273.15); }

    double value() const noexcept { return k_; }
    double in_celsius() const noexcept { return k_ - 273.15; }

    friend auto operator<=>(const Temperature&, const Temperature&) = default;

private:
    double k_ = 293.15;
};

/// Minimum energy to erase one bit at temperature T: k * T * ln 2.
inline double landauer_bit_energy(const PhysicalConstants& constants, Temperature temp) {
    return constants.boltzmann_k() * temp.value() * constants.ln2();
}

/// Temperature the per-bit energy term is evaluated at by default. The
/// headline rate numbers assume 300 K ambient, not the junction temperature.
inline Temperature landauer_reference_temperature() { return Temperature::kelvin(300.0); }

/// A semiconductor process node: feature size plus the multiplicative gap
/// between its transistor switching energy and the Landauer bound. The gap
/// cannot be below 1 (switching energy cannot undercut the bound).
class SemiconductorNode {
public:
    SemiconductorNode(double feature_size_nm, double gap_factor)
        : feature_size_nm_(feature_size_nm), gap_factor_(gap_factor) {
        detail::require(detail::finite(feature_size_nm_) && feature_size_nm_ > 0.0,
                        "feature size must be finite and > 0 nm");
        detail::require(detail::finite(gap_factor_) && gap_factor_ >= 1.0,
                        "gap factor must be finite and >= 1");
    }

    double feature_size_nm() const noexcept { return feature_size_nm_; }
    double gap_factor() const noexcept { return gap_factor_; }

private:
    double feature_size_nm_;
    double gap_factor_;
};

// Built-in process nodes. The 5 nm gap is the published switching-energy
// estimate; the 10 nm and 14 nm gaps are calibrated constants, recovered by
// inverting the rate ceiling at the default budget against the 2.17 Gbps and
// 1.55 Gbps endpoints (see gap_from_rmax in landauer.hpp).
inline constexpr double kGap5nm = 454.2;
inline constexpr double kGap10nm = 2039.3437699863267;
inline constexpr double kGap14nm = 2855.0812779808574;

inline SemiconductorNode node_5nm() { return SemiconductorNode(5.0, kGap5nm); }
inline SemiconductorNode node_10nm() { return SemiconductorNode(10.0, kGap10nm); }
inline SemiconductorNode node_14nm() { return SemiconductorNode(14.0, kGap14nm); }

struct NodePreset {
    std::string_view name;
    SemiconductorNode node;
    std::string_view gap_source;
};

std::span<const NodePreset> known_nodes();

/// Case-sensitive lookup of "5nm", "10nm", "14nm".
std::optional<SemiconductorNode> find_node(std::string_view name);

/// Baseband/chip parameters. beta is the baseband share of chip compute
/// power; the application processor and storage take at least 66 %, so beta
/// is hard-capped at 0.34 regardless of which constructor is used.
class ChipProfile {
public:
    static constexpr double kBetaMax = 0.34;

    /// Validated construction with the typical circuit parameters:
    /// fanout in [3, 4] and activity factor in [0.1, 0.2].
    static ChipProfile typical(SemiconductorNode node,
                               double beta,
                               double k_bp = 1e8,
                               double fanout_f0 = 4.0,
                               double activity_alpha = 0.2,
                               Power p_td = Power::watts(3.0)) {
        detail::require(fanout_f0 >= 3.0 && fanout_f0 <= 4.0, "fanout must be in [3, 4]");
        detail::require(activity_alpha >= 0.1 && activity_alpha <= 0.2,
                        "activity factor must be in [0.1, 0.2]");
        return ChipProfile(node, beta, k_bp, fanout_f0, activity_alpha, p_td);
    }

    /// Escape hatch for parameter studies: any positive fanout/activity,
    /// still subject to the beta cap and positivity checks.
    static ChipProfile unchecked(SemiconductorNode node,
                                 double beta,
                                 double k_bp,
                                 double fanout_f0,
                                 double activity_alpha,
                                 Power p_td) {
        return ChipProfile(node, beta, k_bp, fanout_f0, activity_alpha, p_td);
    }

    const SemiconductorNode& node() const noexcept { return node_; }
    double k_bp() const noexcept { return k_bp_; }
    double fanout_f0() const noexcept { return fanout_f0_; }
    double activity_alpha() const noexcept { return activity_alpha_; }
    double beta() const noexcept { return beta_; }
    Power p_td() const noexcept { return p_td_; }

    ChipProfile with_beta(double beta) const {
        return ChipProfile(node_, beta, k_bp_, fanout_f0_, activity_alpha_, p_td_);
    }

private:
    ChipProfile(SemiconductorNode node, double beta, double k_bp, double fanout_f0,
                double activity_alpha, Power p_td)
        : node_(node),
          k_bp_(k_bp),
          fanout_f0_(fanout_f0),
          activity_alpha_(activity_alpha),
          beta_(beta),
          p_td_(p_td) {
        detail::require(detail::finite(k_bp_) && k_bp_ > 0.0, "k_bp must be finite and > 0");
        detail::require(detail::finite(fanout_f0_) && fanout_f0_ > 0.0, "fanout must be finite and > 0");
        detail::require(detail::finite(activity_alpha_) && activity_alpha_ > 0.0,
                        "activity factor must be finite and > 0");
        detail::require(detail::finite(beta_) && beta_ > 0.0 && beta_ <= kBetaMax,
                        "beta must be in (0, 0.34]");
    }

    SemiconductorNode node_;
    double k_bp_;
    double fanout_f0_;
    double activity_alpha_;
    double beta_;
    Power p_td_;
};

/// Receive RF chain parameters: one LNA per antenna, a power-added
/// efficiency, and the fraction of LNA heat that couples into the chip
/// hotspot.
class RfChainConfig {
public:
    RfChainConfig()
        : RfChainConfig(4, Power::milliwatts(24.3), 0.59, 0.30, /*allow_eta_one=*/false) {}

    RfChainConfig(int n_trx, Power p_lna, double pae_eta, double lambda_coupling)
        : RfChainConfig(n_trx, p_lna, pae_eta, lambda_coupling, /*allow_eta_one=*/false) {}

    /// Permits the eta = 1 boundary (an ideal amplifier that emits no heat).
    static RfChainConfig unchecked(int n_trx, Power p_lna, double pae_eta, double lambda_coupling) {
        return RfChainConfig(n_trx, p_lna, pae_eta, lambda_coupling, /*allow_eta_one=*/true);
    }

    int n_trx() const noexcept { return n_trx_; }
    Power p_lna() const noexcept { return p_lna_; }
    double pae_eta() const noexcept { return pae_eta_; }
    double lambda_coupling() const noexcept { return lambda_coupling_; }

private:
    RfChainConfig(int n_trx, Power p_lna, double pae_eta, double lambda_coupling, bool allow_eta_one)
        : n_trx_(n_trx), p_lna_(p_lna), pae_eta_(pae_eta), lambda_coupling_(lambda_coupling) {
        detail::require(n_trx_ >= 1, "antenna count must be >= 1");
        const double eta_hi = allow_eta_one ? 1.0 : 1.0 - 1e-15;
        detail::require(detail::finite(pae_eta_) && pae_eta_ >= 0.0 && pae_eta_ <= eta_hi,
                        "power-added efficiency must be in [0, 1)");
        detail::require(detail::finite(lambda_coupling_) && lambda_coupling_ >= 0.0 && lambda_coupling_ <= 1.0,
                        "heat coupling ratio must be in [0, 1]");
    }

    int n_trx_;
    Power p_lna_;
    double pae_eta_;
    double lambda_coupling_;
};

/// Lumped thermal mass of the hotspot area on the handset surface: a small
/// aluminium plate that absorbs all excess heat. The mass is always derived
/// from density * area * thickness, never stored.
class SurfacePlate {
public:
    SurfacePlate()
        : SurfacePlate(870.0, 3000.0, 1e-4, 1e-3,
                       Temperature::kelvin(300.15), Temperature::kelvin(318.15), 0.0) {}

    SurfacePlate(double specific_heat_j_per_kg_k,
                 double density_kg_per_m3,
                 double area_m2,
                 double thickness_m,
                 Temperature t_envir,
                 Temperature t_safe,
                 double leak_fraction = 0.0)
        : specific_heat_(specific_heat_j_per_kg_k),
          density_(density_kg_per_m3),
          area_(area_m2),
          thickness_(thickness_m),
          t_envir_(t_envir),
          t_safe_(t_safe),
          leak_fraction_(leak_fraction) {
        detail::require(detail::finite(specific_heat_) && specific_heat_ > 0.0,
                        "specific heat must be finite and > 0");
        detail::require(detail::finite(density_) && density_ > 0.0, "density must be finite and > 0");
        detail::require(detail::finite(area_) && area_ > 0.0, "area must be finite and > 0");
        detail::require(detail::finite(thickness_) && thickness_ > 0.0,
                        "thickness must be finite and > 0");
        detail::require(t_safe_.value() > t_envir_.value(), "t_safe must exceed t_envir");
        detail::require(detail::finite(leak_fraction_) && leak_fraction_ >= 0.0 && leak_fraction_ < 1.0,
                        "leak fraction must be in [0, 1)");
    }

    double specific_heat() const noexcept { return specific_heat_; }
    double density() const noexcept { return density_; }
    double area_m2() const noexcept { return area_; }
    double thickness_m() const noexcept { return thickness_; }
    Temperature t_envir() const noexcept { return t_envir_; }
    Temperature t_safe() const noexcept { return t_safe_; }
    double leak_fraction() const noexcept { return leak_fraction_; }

    /// Plate mass in kg, derived.
    double mass_kg() const noexcept { return density_ * area_ * thickness_; }

    /// Heat capacity C * M in J/K, derived.
    double heat_capacity_j_per_k() const noexcept { return specific_heat_ * mass_kg(); }

    SurfacePlate with_t_envir(Temperature t) const {
        return SurfacePlate(specific_heat_, density_, area_, thickness_, t, t_safe_, leak_fraction_);
    }

private:
    double specific_heat_;  // J/(kg K)
    double density_;        // kg/m^3
    double area_;           // m^2
    double thickness_;      // m
    Temperature t_envir_;
    Temperature t_safe_;
    double leak_fraction_;
};

}  // namespace rxlimit
